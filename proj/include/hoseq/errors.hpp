/* Copyright 2026 The hoseq Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#ifndef HOSEQ_ERRORS_HPP
#define HOSEQ_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace hoseq {

// Every failure surfaced by the library carries a stable kind name so the CLI
// can print a machine-parsable "error: <Kind>: <message>" line.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define HOSEQ_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

HOSEQ_DEFINE_ERROR(EmptyDeployment);
HOSEQ_DEFINE_ERROR(InvalidArea);
HOSEQ_DEFINE_ERROR(InvalidConfig);
HOSEQ_DEFINE_ERROR(VocabularyError);
HOSEQ_DEFINE_ERROR(SplitError);
HOSEQ_DEFINE_ERROR(ParseError);
HOSEQ_DEFINE_ERROR(ShapeError);
HOSEQ_DEFINE_ERROR(CacheError);
HOSEQ_DEFINE_ERROR(EmptyDatasetError);
HOSEQ_DEFINE_ERROR(TaskMismatchError);
HOSEQ_DEFINE_ERROR(FormatError);
HOSEQ_DEFINE_ERROR(UsageError);

#undef HOSEQ_DEFINE_ERROR

}  // namespace hoseq

#endif  // HOSEQ_ERRORS_HPP
