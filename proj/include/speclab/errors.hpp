// Copyright 2026 The speclab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace speclab {

/// Root bracket whose endpoint values do not change sign.
class InvalidBracketError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Mask with too few unknowns, or one that is not 4-connected.
class DegenerateDomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A counting query above the trusted end of a spectrum.
class OutOfTrustedRangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Spectra that were supposed to describe the same domain do not.
class DomainMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InsufficientDataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Heat-trace sum whose truncated tail is not negligible.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sub-domains that overlap or leave the enclosing domain.
class PartitionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace speclab
