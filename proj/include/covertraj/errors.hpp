// Copyright 2026 The covertraj Authors
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

#pragma once

#include <stdexcept>

namespace covertraj {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Trajectories of different lengths fed to a point-wise operation.
class LengthMismatch : public Error {
 public:
  using Error::Error;
};

/// Trajectories with different sampling intervals fed to a point-wise operation.
class RateMismatch : public Error {
 public:
  using Error::Error;
};

class EmptySet : public Error {
 public:
  using Error::Error;
};

class EmptyCorpus : public Error {
 public:
  using Error::Error;
};

/// Instance too large for exhaustive search.
class TooLarge : public Error {
 public:
  using Error::Error;
};

/// Corpus lacks the per-sample initial states a control-profile cover needs.
class MissingSeedStates : public Error {
 public:
  using Error::Error;
};

class KOutOfRange : public Error {
 public:
  using Error::Error;
};

class EmptyRecords : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class EmptyDataset : public Error {
 public:
  using Error::Error;
};

/// Parameter outside its documented range.
class InvalidRange : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent file contents.
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace covertraj
