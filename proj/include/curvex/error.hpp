// Copyright 2026 The curvex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CURVEX_ERROR_HPP
#define CURVEX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace curvex {

enum class ErrorKind {
  kInvalidArgument,
  kParse,
  kPrecondition,
  kGeneration,
  kInternal,
};

// Every failure raised by the library carries one of the kinds above; the C
// API maps them one-to-one onto status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace curvex

#endif  // CURVEX_ERROR_HPP
