#pragma once

#include <stdexcept>
#include <string>

namespace convoeval {

/// Bad configuration: missing columns, unknown tags, out-of-range parameters.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem / stream failures.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// A model endpoint could not produce a usable completion.
class CollectionError : public std::runtime_error {
public:
    CollectionError(const std::string& what, int last_status, int attempts)
        : std::runtime_error(what), last_status(last_status), attempts(attempts) {}

    int last_status = 0;  // 0 when the failure was transport-level
    int attempts = 0;
};

/// The endpoint answered but the first choice had empty content.
class EmptyResponseError : public std::runtime_error {
public:
    explicit EmptyResponseError(const std::string& what) : std::runtime_error(what) {}
};

/// Emotion classification failed; the affected question stays unscored
/// for emotion consistency rather than being defaulted.
class ClassificationError : public std::runtime_error {
public:
    explicit ClassificationError(const std::string& what) : std::runtime_error(what) {}
};

/// Statistics preconditions (zero variance, missing baseline, n too small).
class AnalysisError : public std::runtime_error {
public:
    explicit AnalysisError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace convoeval
