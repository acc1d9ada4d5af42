#pragma once

#include <cstdio>
#include <string>

namespace rulelist {

/// Formats a bin cut point for use inside tokens, e.g. "127.5", "29.65",
/// "16.0". Shortest form up to 12 significant digits, always with a
/// decimal point so cut labels are visibly numeric.
inline std::string format_cut(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  std::string s(buf);
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
      s.find("inf") == std::string::npos && s.find("nan") == std::string::npos) {
    s += ".0";
  }
  return s;
}

/// Raw feature values in explanations print with one decimal, e.g. "152.0".
inline std::string format_raw_value(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.1f", x);
  return buf;
}

/// Probability in a textual explanation: two decimals with a redundant
/// trailing zero dropped, so 0.76 -> "0.76" and 0.30 -> "0.3".
inline std::string format_probability(double p) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.2f", p);
  std::string s(buf);
  if (s.size() >= 2 && s.back() == '0' && s[s.size() - 2] != '.') s.pop_back();
  return s;
}

/// Per-rule probability in the rendered model, e.g. "76.0%".
inline std::string format_percent(double p) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.1f%%", p * 100.0);
  return buf;
}

}  // namespace rulelist
