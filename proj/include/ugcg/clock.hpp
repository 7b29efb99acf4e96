// Copyright (C) 2026 ugcg-guard authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <condition_variable>
#include <memory>
#include <mutex>
#include <thread>

namespace ugcg {

// Time source used by the chain engine, the rate limiter and the retry
// wrapper. Injecting a virtual clock makes timing-dependent behaviour
// deterministic in tests.
class Clock {
public:
    virtual ~Clock() = default;

    // Milliseconds since the clock's epoch.
    virtual std::chrono::milliseconds now() = 0;

    virtual void sleep_for(std::chrono::milliseconds d) = 0;
};

class SystemClock final : public Clock {
public:
    std::chrono::milliseconds now() override {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::system_clock::now().time_since_epoch());
    }

    void sleep_for(std::chrono::milliseconds d) override {
        std::this_thread::sleep_for(d);
    }
};

// Manually advanced clock. sleep_for() blocks the calling thread until
// advance() has moved the clock past the requested wake-up time.
class VirtualClock final : public Clock {
public:
    explicit VirtualClock(std::chrono::milliseconds start = std::chrono::milliseconds{0})
        : now_(start) {}

    std::chrono::milliseconds now() override {
        std::lock_guard<std::mutex> lock(mutex_);
        return now_;
    }

    void sleep_for(std::chrono::milliseconds d) override {
        std::unique_lock<std::mutex> lock(mutex_);
        const auto wake = now_ + d;
        cv_.wait(lock, [&] { return now_ >= wake; });
    }

    void advance(std::chrono::milliseconds d) {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            now_ += d;
        }
        cv_.notify_all();
    }

private:
    std::mutex mutex_;
    std::condition_variable cv_;
    std::chrono::milliseconds now_;
};

// Fixed clock: now() never changes, sleep_for() returns immediately.
// Useful where byte-identical serialized output is asserted.
class FixedClock final : public Clock {
public:
    explicit FixedClock(std::chrono::milliseconds at = std::chrono::milliseconds{0})
        : at_(at) {}

    std::chrono::milliseconds now() override { return at_; }
    void sleep_for(std::chrono::milliseconds) override {}

private:
    std::chrono::milliseconds at_;
};

inline std::shared_ptr<Clock> system_clock() {
    static auto clock = std::make_shared<SystemClock>();
    return clock;
}

}  // namespace ugcg
