#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "blockalg/element.hpp"

namespace blockalg {

/// Malformed input text; offset is the byte position of the failure.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t offset, std::string expected)
      : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": expected " +
                           expected),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

/// Well-formed text denoting a value outside the domain (negative second
/// index, zero denominator, nonzero scalar term with no basis vector).
class DomainError : public std::runtime_error {
 public:
  DomainError(std::size_t offset, const std::string& what_arg)
      : std::runtime_error("domain error at offset " + std::to_string(offset) + ": " + what_arg),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// A checker was handed input that violates its stated precondition.
class PreconditionFailed : public std::runtime_error {
 public:
  explicit PreconditionFailed(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// The witness returned for the anchor pair disagrees with the 2-local map
/// at one of the anchors: the provider is not a valid witness family.
class AnchorContractViolation : public std::runtime_error {
 public:
  AnchorContractViolation(const std::string& what_arg, Element residual)
      : std::runtime_error(what_arg), residual_(std::move(residual)) {}

  const Element& residual() const { return residual_; }

 private:
  Element residual_;
};

/// The correction residual at L[-1,1] is not a multiple of L[-1,1]: the map
/// is provably not a 2-local derivation.
class NotProportional : public std::runtime_error {
 public:
  NotProportional(const std::string& what_arg, Element residual)
      : std::runtime_error(what_arg), residual_(std::move(residual)) {}

  const Element& residual() const { return residual_; }

 private:
  Element residual_;
};

/// A witness perturbation kernel fails to annihilate a member of its pair.
class KernelNotAnnihilating : public std::runtime_error {
 public:
  KernelNotAnnihilating(const std::string& what_arg, Element member, Element residual)
      : std::runtime_error(what_arg), member_(std::move(member)), residual_(std::move(residual)) {}

  const Element& member() const { return member_; }
  const Element& residual() const { return residual_; }

 private:
  Element member_;
  Element residual_;
};

/// A derivation table does not cover its declared window.
class MissingAssignment : public std::runtime_error {
 public:
  MissingAssignment(const std::string& what_arg, BasisIndex index)
      : std::runtime_error(what_arg), index_(index) {}

  BasisIndex index() const { return index_; }

 private:
  BasisIndex index_;
};

/// Structural problem in a table or witness file (bad header, unknown key,
/// duplicate assignment, ...). Carries the 1-based line number.
class FileFormatError : public std::runtime_error {
 public:
  FileFormatError(const std::string& path, std::size_t line, const std::string& what_arg)
      : std::runtime_error(path + ":" + std::to_string(line) + ": " + what_arg), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace blockalg
