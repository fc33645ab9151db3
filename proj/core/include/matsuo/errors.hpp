#pragma once

#include <stdexcept>
#include <string>

namespace matsuo {

// Base of all library errors. ValidationError maps to CLI exit code 2,
// UnsupportedError to exit code 3.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ValidationError : public Error {
public:
  using Error::Error;
};

class UnsupportedError : public Error {
public:
  using Error::Error;
};

// A conjugation table breaks one of the 3-transposition axioms.
class InvalidConjugation : public ValidationError {
public:
  InvalidConjugation(const std::string& axiom, int a, int b, int c)
      : ValidationError("invalid conjugation table: axiom '" + axiom +
                        "' fails at (" + std::to_string(a) + ", " +
                        std::to_string(b) + ", " + std::to_string(c) + ")"),
        axiom(axiom), a(a), b(b), c(c) {}
  std::string axiom;
  int a, b, c;
};

class NonUniformClasses : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class QuotientIllDefined : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class NotConnected : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class NotIdempotent : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class NotSemisimple : public Error {
public:
  using Error::Error;
};

class NotInvolution : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class NotAutomorphism : public ValidationError {
public:
  NotAutomorphism(int c, int d)
      : ValidationError("permutation is not a Fischer-space automorphism: "
                        "perm(c^d) != perm(c)^perm(d) at (" +
                        std::to_string(c) + ", " + std::to_string(d) + ")"),
        c(c), d(d) {}
  int c, d;
};

class WrongFlipKind : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class Underdetermined : public UnsupportedError {
public:
  using UnsupportedError::UnsupportedError;
};

class NonIntegralSolution : public Error {
public:
  using Error::Error;
};

class NonIntegralSpectrum : public UnsupportedError {
public:
  using UnsupportedError::UnsupportedError;
};

class DenominatorDivisibleByP : public UnsupportedError {
public:
  using UnsupportedError::UnsupportedError;
};

class Irreducible : public Error {
public:
  using Error::Error;
};

}  // namespace matsuo
