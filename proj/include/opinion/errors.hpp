#pragma once

#include <stdexcept>
#include <string>

namespace opinion {

// Error categories map onto CLI exit codes: ConfigError -> 2, DataError -> 3,
// NumericalError -> 4.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct DataError : Error {
    using Error::Error;
};

struct NumericalError : Error {
    using Error::Error;
};

// graph loading
struct EmptyInput : DataError {
    EmptyInput() : DataError("edge list is empty") {}
};

struct SelfLoop : DataError {
    explicit SelfLoop(long long id)
        : DataError("self-loop at node " + std::to_string(id)) {}
};

struct DuplicateEdge : DataError {
    DuplicateEdge(long long u, long long v)
        : DataError("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")") {}
};

struct DisconnectedGraph : DataError {
    DisconnectedGraph() : DataError("graph is not connected") {}
};

struct ParseError : DataError {
    using DataError::DataError;
};

struct FileError : DataError {
    explicit FileError(const std::string& path) : DataError("cannot open file: " + path) {}
};

// partitioning
struct OverlappingLeaderSets : ConfigError {
    OverlappingLeaderSets() : ConfigError("leader sets s0 and s1 overlap") {}
};

struct EmptyS0 : ConfigError {
    EmptyS0() : ConfigError("0-leader set is empty") {}
};

struct EmptyS1 : ConfigError {
    EmptyS1() : ConfigError("1-leader set is empty") {}
};

struct NoFollowers : ConfigError {
    NoFollowers() : ConfigError("every node is a leader; no followers remain") {}
};

struct TooManyLeaders : ConfigError {
    TooManyLeaders(int n0, int n1, int n)
        : ConfigError("cannot draw " + std::to_string(n0) + "+" + std::to_string(n1) +
                      " leaders from " + std::to_string(n) + " nodes and keep a follower") {}
};

// parameter ranges
struct EtaOutOfRange : ConfigError {
    explicit EtaOutOfRange(double eta)
        : ConfigError("eta = " + std::to_string(eta) + " is outside (0, 1)") {}
};

struct EpsOutOfRange : ConfigError {
    explicit EpsOutOfRange(double eps)
        : ConfigError("eps = " + std::to_string(eps) + " is outside (0, 1/2)") {}
};

struct SizeCapExceeded : ConfigError {
    SizeCapExceeded(int nf, int cap)
        : ConfigError("follower count " + std::to_string(nf) +
                      " exceeds dense-work cap " + std::to_string(cap)) {}
};

struct CombinatorialBlowup : ConfigError {
    CombinatorialBlowup(int q, int k, long cap)
        : ConfigError("C(" + std::to_string(q) + ", " + std::to_string(k) +
                      ") subsets exceed the enumeration cap " + std::to_string(cap)) {}
};

struct InvalidOpinion : ConfigError {
    explicit InvalidOpinion(double v)
        : ConfigError("opinion value " + std::to_string(v) + " is outside [0, 1]") {}
};

// numerics
struct NoConvergence : NumericalError {
    NoConvergence(long iterations, double residual)
        : NumericalError("no convergence after " + std::to_string(iterations) +
                         " iterations (residual " + std::to_string(residual) + ")") {}
};

}  // namespace opinion
