#pragma once

#include <stdexcept>
#include <string>

namespace odolab {

// Base class for everything odolab throws on purpose. Catching this at the
// CLI boundary is enough to turn any library failure into a clean report.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or out-of-domain scale data (empty cycle product, zero ratios,
// a profile with no infinite part, ...).
class ScaleError : public Error {
public:
    using Error::Error;
};

// An operation needed more truncation depth than the caller provided; the
// message says how much was available and why it was not enough.
class DepthError : public Error {
public:
    using Error::Error;
};

// An exhaustive computation would exceed its stated budget. These are loud on
// purpose: nothing in odolab silently falls back to an approximation.
class BudgetError : public Error {
public:
    using Error::Error;
};

} // namespace odolab
