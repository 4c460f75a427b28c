// Copyright 2026 The indicial-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace indicial {

// Base for every recoverable failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IndexBelowMinimum : public Error {
 public:
  using Error::Error;
};

class InadmissibleLambda : public Error {
 public:
  using Error::Error;
};

// Newton polishing or the QR sweep did not reach the residual target.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, int root_index)
      : Error(what), root_index_(root_index) {}
  int root_index() const noexcept { return root_index_; }

 private:
  int root_index_;
};

class NotSingular : public Error {
 public:
  using Error::Error;
};

class PoleAtNonpositiveInteger : public Error {
 public:
  using Error::Error;
};

class DegenerateProfile : public Error {
 public:
  using Error::Error;
};

class BadDelta : public Error {
 public:
  using Error::Error;
};

}  // namespace indicial
