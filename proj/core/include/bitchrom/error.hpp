#pragma once

#include <stdexcept>

namespace bitchrom {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Chromosome or schema length outside its valid range (e.g. length 0).
class InvalidLengthError : public Error {
public:
    using Error::Error;
};

// Array capacity too small to hold any allele element.
class InvalidCapacityError : public Error {
public:
    using Error::Error;
};

// Requested length does not fit the metadata element.
class CapacityExceededError : public Error {
public:
    using Error::Error;
};

// Allele index >= chromosome length.
class IndexOutOfRangeError : public Error {
public:
    using Error::Error;
};

// Operands differ in layout or length.
class IncompatibleChromosomeError : public Error {
public:
    using Error::Error;
};

// Schema length does not match the chromosome length it is applied to.
class IncompatibleSchemaError : public Error {
public:
    using Error::Error;
};

// Invalid run parameters; the message names the offending field.
class ConfigurationError : public Error {
public:
    using Error::Error;
};

// Fitness-proportional selection with zero total fitness.
class DegenerateFitnessError : public Error {
public:
    using Error::Error;
};

} // namespace bitchrom
