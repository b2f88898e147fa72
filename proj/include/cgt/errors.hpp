#pragma once

#include <stdexcept>
#include <string>

namespace cgt {

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct NotPiSeparable : std::runtime_error {
    explicit NotPiSeparable(const std::string& what) : std::runtime_error(what) {}
};

struct SearchBudgetExhausted : std::runtime_error {
    explicit SearchBudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

struct CorpusError : std::runtime_error {
    explicit CorpusError(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cgt
