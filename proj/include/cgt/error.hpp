#pragma once

#include <stdexcept>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cgt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad indices, bad parameters, tables failing the group axioms.
class InputError : public Error {
 public:
  using Error::Error;
};

// A Cayley table failing one of the group axioms. `axiom` is one of "shape",
// "closure", "identity", "inverses", "associativity"; `indices` locate the violation.
class AxiomError : public InputError {
 public:
  AxiomError(std::string axiom, std::vector<std::uint64_t> indices, const std::string& what)
      : InputError(what), axiom_(std::move(axiom)), indices_(std::move(indices)) {}

  const std::string& axiom() const noexcept { return axiom_; }
  const std::vector<std::uint64_t>& indices() const noexcept { return indices_; }

 private:
  std::string axiom_;
  std::vector<std::uint64_t> indices_;
};

// An operation was called outside its stated hypotheses. The message names a witness.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A constructive step that a lemma guarantees to succeed did not. Verifier turns these
// into FAIL records instead of propagating them.
class LemmaViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace cgt
