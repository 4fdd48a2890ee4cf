#pragma once

#include <stdexcept>
#include <string>

namespace microga {

/// Base class for every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A GaConfig field is outside the bounds allowed by its mode.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// An individual index is outside [0, pop_size).
class IndexError : public Error {
 public:
  using Error::Error;
};

/// A value is outside its admissible range (draw bounds, strict-mode fitness).
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Engine operations were called out of order.
class SequenceError : public Error {
 public:
  using Error::Error;
};

/// Writing to an output sink failed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace microga
