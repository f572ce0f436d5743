#pragma once

#include <array>
#include <cstdint>

namespace sboxkit::tables {

extern const std::array<std::uint8_t, 256> kAesTable;
extern const std::array<std::uint8_t, 256> kSm4Table;
extern const std::array<std::uint8_t, 256> kSkipjackTable;
extern const std::array<std::uint8_t, 256> kWhirlpoolTable;
extern const std::array<std::uint8_t, 256> kZucS0Table;
extern const std::array<std::uint8_t, 256> kZucS1Table;
extern const std::array<std::uint8_t, 256> kPaperTable4;

}  // namespace sboxkit::tables
