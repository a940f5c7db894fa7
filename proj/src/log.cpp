#include "face/log.hpp"

#include <iostream>

namespace face {

namespace {
WarnHandler g_warn_handler;
}

void log_info(const std::string& msg) { std::cerr << "[face] " << msg << "\n"; }

void log_warn(const std::string& msg) {
  if (g_warn_handler) {
    g_warn_handler(msg);
    return;
  }
  std::cerr << "[face] warning: " << msg << "\n";
}

void set_warn_handler(WarnHandler handler) { g_warn_handler = std::move(handler); }

}  // namespace face
