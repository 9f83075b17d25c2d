#pragma once

#include <stdexcept>
#include <string>

namespace spikecount {

/// A network or firing state whose shape does not match what an operation needs.
class StructuralError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Malformed network document, bit string, or numeric literal.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Output block of a total-spikes network that is not in a clean configuration.
class NotCleanStateError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace spikecount
