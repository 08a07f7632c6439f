#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace coopic {

using Scalar = double;
using Complex = std::complex<Scalar>;

using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using CMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using BinMat = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Generic precondition violation (bad ids, shapes, parameter ranges).
struct InvalidArgument : Error {
    using Error::Error;
};

/// Adjacency matrix has a zero diagonal entry: every user must hear its own transmitter.
struct DirectLinkMissing : Error {
    using Error::Error;
};

/// Requested a flow reduction for a transmitter/receiver pair that is wirelessly connected.
struct AdjacentPair : Error {
    using Error::Error;
};

/// Exhaustive enumeration requested above the configured size limit.
struct LimitExceeded : Error {
    using Error::Error;
};

/// A node required to reach all others is disconnected from some of them.
struct Unreachable : Error {
    using Error::Error;
};

/// Matrix input contains NaN or infinite entries.
struct NonFinite : Error {
    using Error::Error;
};

/// Sampled super channel matrix is numerically rank deficient.
struct SingularChannel : Error {
    using Error::Error;
};

/// Even-K formula called with odd K.
struct OddK : Error {
    using Error::Error;
};

/// Odd-K formula called with even K.
struct EvenK : Error {
    using Error::Error;
};

/// Partition bound called with an empty or full user group.
struct EmptyPartition : Error {
    using Error::Error;
};

/// Power grid unusable for slope fitting (too few points or too narrow).
struct DegenerateGrid : Error {
    using Error::Error;
};

/// Input file could not be parsed (syntax, schema, or value errors).
struct ParseError : Error {
    using Error::Error;
};

}  // namespace coopic
