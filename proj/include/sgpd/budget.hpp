#ifndef SGPD_BUDGET_HPP_
#define SGPD_BUDGET_HPP_

#include <cstdlib>
#include <string>

namespace sgpd {

// Caps for the brute-force enumeration routines. The function-space bound
// limits |Z|^k searches over candidate functions.
struct EnumerationBudget {
  int max_order = 3;
  int max_carrier = 3;
  long long max_function_space = 1'000'000;

  // Reads the SGPD_BUDGET environment variable, an integer triple
  // "order,carrier,fnspace". Missing or malformed values keep the defaults.
  static EnumerationBudget from_env() {
    EnumerationBudget b;
    const char* raw = std::getenv("SGPD_BUDGET");
    if (raw == nullptr) {
      return b;
    }
    std::string text(raw);
    long long out[3] = {b.max_order, b.max_carrier, b.max_function_space};
    std::size_t pos = 0;
    for (int i = 0; i < 3 && pos < text.size(); ++i) {
      std::size_t comma = text.find(',', pos);
      std::string part = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      try {
        out[i] = std::stoll(part);
      } catch (...) {
        return b;
      }
      if (comma == std::string::npos) {
        pos = text.size();
      } else {
        pos = comma + 1;
      }
    }
    b.max_order = static_cast<int>(out[0]);
    b.max_carrier = static_cast<int>(out[1]);
    b.max_function_space = out[2];
    return b;
  }
};

}  // namespace sgpd

#endif  // SGPD_BUDGET_HPP_
