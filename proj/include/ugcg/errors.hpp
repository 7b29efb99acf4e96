// Copyright (C) 2026 ugcg-guard authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace ugcg {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad arguments or violated preconditions supplied by the caller.
class InputError : public Error {
public:
    using Error::Error;
};

// Domain data that violates its own invariants (e.g. a malformed transcript).
class ValidationError : public Error {
public:
    using Error::Error;
};

// File could not be loaded; carries the offending line when known (1-based,
// 0 when the problem is not tied to a line).
class LoadError : public Error {
public:
    LoadError(const std::string& msg, int line = 0) : Error(msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Stable error classes the chain engine uses for retry decisions.
enum class BackendErrorClass { Transport, Auth, RateLimit, Protocol };

inline const char* to_string(BackendErrorClass c) {
    switch (c) {
    case BackendErrorClass::Transport: return "transport";
    case BackendErrorClass::Auth: return "auth";
    case BackendErrorClass::RateLimit: return "rate-limit";
    case BackendErrorClass::Protocol: return "protocol";
    }
    return "unknown";
}

class BackendError : public Error {
public:
    BackendError(BackendErrorClass kind, const std::string& msg)
        : Error(msg), kind_(kind) {}
    BackendErrorClass kind() const { return kind_; }

private:
    BackendErrorClass kind_;
};

class TransportError : public BackendError {
public:
    explicit TransportError(const std::string& msg)
        : BackendError(BackendErrorClass::Transport, msg) {}
};

class AuthError : public BackendError {
public:
    explicit AuthError(const std::string& msg)
        : BackendError(BackendErrorClass::Auth, msg) {}
};

class RateLimitError : public BackendError {
public:
    explicit RateLimitError(const std::string& msg)
        : BackendError(BackendErrorClass::RateLimit, msg) {}
};

class ProtocolError : public BackendError {
public:
    explicit ProtocolError(const std::string& msg)
        : BackendError(BackendErrorClass::Protocol, msg) {}
};

}  // namespace ugcg
