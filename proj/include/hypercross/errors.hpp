#ifndef HYPERCROSS_ERRORS_HPP
#define HYPERCROSS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hypercross {

// Exit-code families used by the CLI:
//   ValidationError  -> 1   (malformed specs, bad arguments, refused inputs)
//   HypothesisError  -> 2   (theorem hypotheses violated, divergent constants)
//   CountOverflowError -> 3 (exact count exceeds the 128-bit budget)

class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

class NonMonotoneSequenceError : public ValidationError {
public:
  explicit NonMonotoneSequenceError(const std::string& msg) : ValidationError(msg) {}
};

class NonPositiveRateError : public ValidationError {
public:
  explicit NonPositiveRateError(const std::string& msg) : ValidationError(msg) {}
};

class BadExponentsError : public ValidationError {
public:
  explicit BadExponentsError(const std::string& msg) : ValidationError(msg) {}
};

class BadPrefixBlockError : public ValidationError {
public:
  explicit BadPrefixBlockError(const std::string& msg) : ValidationError(msg) {}
};

class UnsupportedZeroMError : public ValidationError {
public:
  explicit UnsupportedZeroMError(const std::string& msg) : ValidationError(msg) {}
};

class InvalidParameterError : public ValidationError {
public:
  explicit InvalidParameterError(const std::string& msg) : ValidationError(msg) {}
};

class BadThresholdError : public ValidationError {
public:
  explicit BadThresholdError(const std::string& msg) : ValidationError(msg) {}
};

class BoxTooLargeError : public ValidationError {
public:
  explicit BoxTooLargeError(const std::string& msg) : ValidationError(msg) {}
};

class PreconditionViolatedError : public ValidationError {
public:
  explicit PreconditionViolatedError(const std::string& msg) : ValidationError(msg) {}
};

class NonPositiveCError : public ValidationError {
public:
  explicit NonPositiveCError(const std::string& msg) : ValidationError(msg) {}
};

class SupportOutsideCrossError : public ValidationError {
public:
  explicit SupportOutsideCrossError(const std::string& msg) : ValidationError(msg) {}
};

class EllipticityViolatedError : public ValidationError {
public:
  explicit EllipticityViolatedError(const std::string& msg) : ValidationError(msg) {}
};

class BoundViolatedError : public ValidationError {
public:
  explicit BoundViolatedError(const std::string& msg) : ValidationError(msg) {}
};

class HypothesisError : public std::runtime_error {
public:
  explicit HypothesisError(const std::string& msg) : std::runtime_error(msg) {}
};

class HypothesisViolatedError : public HypothesisError {
public:
  explicit HypothesisViolatedError(const std::string& msg) : HypothesisError(msg) {}
};

class DivergesError : public HypothesisError {
public:
  explicit DivergesError(const std::string& msg) : HypothesisError(msg) {}
};

class CountOverflowError : public std::runtime_error {
public:
  explicit CountOverflowError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hypercross

#endif
