#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace milnorkit {

// Malformed input: bad word syntax, invalid PD code, schema violations.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A surgery presentation failed one of the hypotheses the Dwyer
// computation needs (null-homology, unlinked surgery components).
class HypothesisError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A resource guard tripped and the computation was abandoned. Guards are
// loud on purpose: a partial answer would be indistinguishable from a
// wrong one.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Guards {
  std::size_t max_word_letters = 1'000'000;
  std::size_t max_series_terms = 4'000'000;
};

}  // namespace milnorkit
