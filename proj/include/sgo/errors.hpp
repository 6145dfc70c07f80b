#ifndef SGO_ERRORS_HPP
#define SGO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sgo {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroDivisor : public Error {
public:
    ZeroDivisor() : Error("division by exact zero") {}
};

class InsufficientPrecision : public Error {
public:
    explicit InsufficientPrecision(const std::string& what) : Error("insufficient precision: " + what) {}
};

class PrecisionExhausted : public Error {
public:
    explicit PrecisionExhausted(const std::string& what) : Error("precision exhausted: " + what) {}
};

class Singular : public Error {
public:
    Singular() : Error("matrix is singular") {}
};

class PatternMismatch : public Error {
public:
    explicit PatternMismatch(const std::string& what) : Error("pattern mismatch: " + what) {}
};

class InvalidRank : public Error {
public:
    InvalidRank(int m, int n) : Error("invalid rank (M,N)=(" + std::to_string(m) + "," + std::to_string(n) + ")") {}
};

class RankMismatch : public Error {
public:
    RankMismatch() : Error("weights belong to different (M,N)") {}
};

class ClassificationStall : public Error {
public:
    ClassificationStall() : Error("classification made no progress") {}
};

class InvariantViolation : public Error {
public:
    explicit InvariantViolation(const std::string& what) : Error("invariant violation: " + what) {}
};

class MixedSupport : public Error {
public:
    MixedSupport() : Error("root vector is not supported on a single simple root") {}
};

class OverlappingSupport : public Error {
public:
    OverlappingSupport() : Error("divisors share a point") {}
};

class NegativeCoefficient : public Error {
public:
    NegativeCoefficient() : Error("root vector has a negative coefficient") {}
};

class NotComparable : public Error {
public:
    NotComparable() : Error("weights are not comparable") {}
};

class MalformedSequences : public Error {
public:
    explicit MalformedSequences(const std::string& what) : Error("malformed sequences: " + what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

}

#endif
