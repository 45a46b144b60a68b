#pragma once

#include <stdexcept>
#include <string>

namespace ordyn {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A point or value outside the domain of an operation (e.g. point > top of space).
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Text input rejected by a parser; carries 1-based position.
struct ParseError : Error {
    ParseError(std::string msg, int line, int col)
        : Error("parse error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          message(std::move(msg)), line(line), col(col) {}
    std::string message;
    int line;
    int col;
};

// An incoherent residue-system presentation; names the violating moduli pair.
struct PresentationError : Error {
    PresentationError(const std::string& msg, unsigned long long a, unsigned long long b)
        : Error(msg), modulus_a(a), modulus_b(b) {}
    unsigned long long modulus_a;
    unsigned long long modulus_b;
};

}  // namespace ordyn
