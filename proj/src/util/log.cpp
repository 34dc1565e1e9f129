#include "noisim/util/log.hpp"

#include <cstdarg>
#include <cstdlib>
#include <cstring>

namespace noisim::log {

static Level resolve_level() {
    const char* env = std::getenv("NOISIM_LOG");
    if (env == nullptr) return Level::info;
    if (std::strcmp(env, "error") == 0) return Level::error;
    if (std::strcmp(env, "debug") == 0) return Level::debug;
    return Level::info;
}

Level level() {
    static Level lv = resolve_level();
    return lv;
}

bool enabled(Level lv) {
    return static_cast<int>(lv) <= static_cast<int>(level());
}

void write(Level lv, const char* fmt, ...) {
    if (!enabled(lv)) return;
    const char* tag = lv == Level::error ? "error" : (lv == Level::info ? "info" : "debug");
    std::fprintf(stderr, "[%s] ", tag);
    va_list args;
    va_start(args, fmt);
    std::vfprintf(stderr, fmt, args);
    va_end(args);
    std::fputc('\n', stderr);
}

} // namespace noisim::log
