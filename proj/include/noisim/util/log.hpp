#pragma once

#include <cstdio>

namespace noisim::log {

enum class Level : int { error = 0, info = 1, debug = 2 };

// Resolved once from NOISIM_LOG (error|info|debug); defaults to info.
Level level();

bool enabled(Level lv);
void write(Level lv, const char* fmt, ...) __attribute__((format(printf, 2, 3)));

#define NOISIM_LOG_ERROR(...) ::noisim::log::write(::noisim::log::Level::error, __VA_ARGS__)
#define NOISIM_LOG_INFO(...)  ::noisim::log::write(::noisim::log::Level::info, __VA_ARGS__)
#define NOISIM_LOG_DEBUG(...) ::noisim::log::write(::noisim::log::Level::debug, __VA_ARGS__)

} // namespace noisim::log
