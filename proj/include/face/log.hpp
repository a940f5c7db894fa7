#pragma once

#include <functional>
#include <string>

namespace face {

void log_info(const std::string& msg);
void log_warn(const std::string& msg);

// Tests install a handler to assert on emitted warnings; pass nullptr to restore stderr output.
using WarnHandler = std::function<void(const std::string&)>;
void set_warn_handler(WarnHandler handler);

}  // namespace face
