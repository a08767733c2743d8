#include "toda_rpp/algebra/variable.hpp"

#include <stdexcept>

namespace toda_rpp {

std::uint64_t Variable::pack_family(std::string_view family) {
  if (family.empty() || family.size() > 4) {
    throw std::invalid_argument("variable family must have 1 to 4 letters: '" +
                                std::string(family) + "'");
  }
  std::uint64_t packed = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    std::uint64_t ch = 0;
    if (k < family.size()) {
      char c = family[k];
      if (c < 'a' || c > 'z') {
        throw std::invalid_argument("variable family must be lowercase: '" +
                                    std::string(family) + "'");
      }
      ch = static_cast<unsigned char>(c);
    }
    packed = (packed << 8) | ch;
  }
  return packed << 32;
}

Variable::Variable(std::string_view family) : key_(pack_family(family)) {}

Variable::Variable(std::string_view family, int index) : key_(pack_family(family)) {
  if (index < -kMaxIndex || index > kMaxIndex) {
    throw std::out_of_range("variable index out of range");
  }
  // Low word is index shifted to be >= 1; zero marks a plain variable.
  key_ |= static_cast<std::uint64_t>(static_cast<std::int64_t>(index) + kMaxIndex + 1);
}

std::string Variable::family() const {
  std::string out;
  for (int shift = 56; shift >= 32; shift -= 8) {
    char c = static_cast<char>((key_ >> shift) & 0xff);
    if (c != 0) out.push_back(c);
  }
  return out;
}

int Variable::index() const noexcept {
  if (!indexed()) return 0;
  return static_cast<int>(static_cast<std::int64_t>(key_ & 0xffffffffULL) - kMaxIndex - 1);
}

std::string Variable::to_string() const {
  if (!indexed()) return family();
  return family() + "[" + std::to_string(index()) + "]";
}

}  // namespace toda_rpp
