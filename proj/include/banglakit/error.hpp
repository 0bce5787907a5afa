// Copyright 2026 The Banglakit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BANGLAKIT_ERROR_HPP_
#define BANGLAKIT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace banglakit {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller misuse: wrong lexicon kind, bad flag combination, out-of-range
// index.  The CLI maps these to exit code 1.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Bad input data or model files: missing files, malformed lines, invalid
// UTF-8, out-of-vocabulary queries.  The CLI maps these to exit code 2.
class DataError : public Error {
 public:
  using Error::Error;
};

// Training cannot proceed or diverged (empty corpus, non-finite loss).
class TrainError : public Error {
 public:
  using Error::Error;
};

}  // namespace banglakit

#endif  // BANGLAKIT_ERROR_HPP_
