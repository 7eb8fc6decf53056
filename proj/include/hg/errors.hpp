#pragma once

#include <stdexcept>
#include <string>

namespace hg {

// Error taxonomy used across the library:
//  - DomainError: an Element was handed to a hypergroup it does not belong to.
//  - ParameterError: a request is ill-formed (empty set, bad exponent, ...).
//  - ValidationError: a structure fails its own defining invariants.
//  - LoadError: a file is missing or cannot be parsed.
//  - CacheError: a cache file parses but does not match the target hypergroup.
//  - CertificateError: a certified object fails one of its guarantees.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : Error {
  using Error::Error;
};
struct ParameterError : Error {
  using Error::Error;
};
struct ValidationError : Error {
  using Error::Error;
};
struct LoadError : Error {
  using Error::Error;
};
struct CacheError : Error {
  using Error::Error;
};
struct CertificateError : Error {
  using Error::Error;
};

}  // namespace hg
