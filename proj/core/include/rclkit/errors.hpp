/*
 * Copyright 2026 The rclkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace rclkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Operator norm exceeds 1 + contraction_slack.
class NotAContraction : public Error {
 public:
  NotAContraction(const std::string& what, double norm)
      : Error(what), norm_(norm) {}
  double norm() const { return norm_; }

 private:
  double norm_;
};

/// The data set does not produce a well-defined underlying contraction.
class IllPosedData : public Error {
 public:
  using Error::Error;
};

/// A property that holds in exact arithmetic failed numerically; usually
/// means the tolerances are too loose or too tight for the input.
class InternalContradiction : public Error {
 public:
  using Error::Error;
};

class OutOfDisc : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class NotContractive : public Error {
 public:
  using Error::Error;
};

/// An operator identity audit exceeded its tolerance.
class AuditFailure : public Error {
 public:
  AuditFailure(const std::string& what, double deviation)
      : Error(what), deviation_(deviation) {}
  double deviation() const { return deviation_; }

 private:
  double deviation_;
};

}  // namespace rclkit
