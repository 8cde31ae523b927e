#pragma once

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace acttend {

enum class LogLevel { Error = 0, Info = 1, Debug = 2 };

// Level comes from ACTTEND_LOG ({error,info,debug}), default info.
inline LogLevel log_level() {
    static LogLevel level = [] {
        const char* env = std::getenv("ACTTEND_LOG");
        if (env == nullptr) return LogLevel::Info;
        if (std::strcmp(env, "error") == 0) return LogLevel::Error;
        if (std::strcmp(env, "debug") == 0) return LogLevel::Debug;
        return LogLevel::Info;
    }();
    return level;
}

template <typename... Args>
void log_error(const char* fmt, Args... args) {
    std::fprintf(stderr, "[error] ");
    std::fprintf(stderr, fmt, args...);
    std::fprintf(stderr, "\n");
}

template <typename... Args>
void log_info(const char* fmt, Args... args) {
    if (log_level() >= LogLevel::Info) {
        std::fprintf(stderr, "[info] ");
        std::fprintf(stderr, fmt, args...);
        std::fprintf(stderr, "\n");
    }
}

template <typename... Args>
void log_debug(const char* fmt, Args... args) {
    if (log_level() >= LogLevel::Debug) {
        std::fprintf(stderr, "[debug] ");
        std::fprintf(stderr, fmt, args...);
        std::fprintf(stderr, "\n");
    }
}

}  // namespace acttend
