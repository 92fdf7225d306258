#pragma once

#include <iostream>
#include <mutex>
#include <sstream>
#include <string>

namespace ogan {

namespace detail {
inline std::mutex& log_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace detail

template <typename... Args>
void log_warn(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  std::lock_guard<std::mutex> lock(detail::log_mutex());
  std::cerr << "[warn] " << os.str() << "\n";
}

template <typename... Args>
void log_info(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  std::lock_guard<std::mutex> lock(detail::log_mutex());
  std::cerr << "[info] " << os.str() << "\n";
}

}  // namespace ogan
