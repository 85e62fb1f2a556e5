#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace slt {

// Byte-level vocabulary: PAD=0, EOS=1, BOS=2, byte b -> b+3. Control tokens
// such as "<mt>" are ordinary byte sequences, not reserved ids.
struct ByteTokenizer {
  static constexpr int pad_id = 0;
  static constexpr int eos_id = 1;
  static constexpr int bos_id = 2;
  static constexpr int vocab_size = 259;

  static std::vector<int> encode(std::string_view text) {
    std::vector<int> ids;
    ids.reserve(text.size());
    for (unsigned char ch : text) ids.push_back(static_cast<int>(ch) + 3);
    return ids;
  }

  // Drops PAD/EOS/BOS; inverse of encode on byte ids.
  static std::string decode(std::span<const int> ids) {
    std::string out;
    out.reserve(ids.size());
    for (int id : ids) {
      if (id >= 3 && id < vocab_size) out.push_back(static_cast<char>(id - 3));
    }
    return out;
  }
};

}  // namespace slt
