// Minimal SHA-1, used only for content-addressing experiment configs in
// reports (git blob framing). Not a security boundary.

#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <string>

namespace caromlab {

namespace detail {

inline std::uint32_t rol32(std::uint32_t v, int s) {
  return (v << s) | (v >> (32 - s));
}

}  // namespace detail

inline std::array<std::uint8_t, 20> sha1(const std::string& data) {
  std::uint32_t h[5] = {0x67452301u, 0xEFCDAB89u, 0x98BADCFEu, 0x10325476u,
                        0xC3D2E1F0u};
  std::string msg = data;
  std::uint64_t bitlen = static_cast<std::uint64_t>(msg.size()) * 8;
  msg.push_back(static_cast<char>(0x80));
  while (msg.size() % 64 != 56) msg.push_back('\0');
  for (int i = 7; i >= 0; --i) {
    msg.push_back(static_cast<char>((bitlen >> (8 * i)) & 0xFF));
  }
  for (std::size_t chunk = 0; chunk < msg.size(); chunk += 64) {
    std::uint32_t w[80];
    for (int i = 0; i < 16; ++i) {
      w[i] = (static_cast<std::uint32_t>(static_cast<std::uint8_t>(
                  msg[chunk + 4 * static_cast<std::size_t>(i)]))
              << 24) |
             (static_cast<std::uint32_t>(static_cast<std::uint8_t>(
                  msg[chunk + 4 * static_cast<std::size_t>(i) + 1]))
              << 16) |
             (static_cast<std::uint32_t>(static_cast<std::uint8_t>(
                  msg[chunk + 4 * static_cast<std::size_t>(i) + 2]))
              << 8) |
             static_cast<std::uint32_t>(static_cast<std::uint8_t>(
                 msg[chunk + 4 * static_cast<std::size_t>(i) + 3]));
    }
    for (int i = 16; i < 80; ++i) {
      w[i] = detail::rol32(w[i - 3] ^ w[i - 8] ^ w[i - 14] ^ w[i - 16], 1);
    }
    std::uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4];
    for (int i = 0; i < 80; ++i) {
      std::uint32_t f, k;
      if (i < 20) {
        f = (b & c) | ((~b) & d);
        k = 0x5A827999u;
      } else if (i < 40) {
        f = b ^ c ^ d;
        k = 0x6ED9EBA1u;
      } else if (i < 60) {
        f = (b & c) | (b & d) | (c & d);
        k = 0x8F1BBCDCu;
      } else {
        f = b ^ c ^ d;
        k = 0xCA62C1D6u;
      }
      std::uint32_t tmp = detail::rol32(a, 5) + f + e + k + w[i];
      e = d;
      d = c;
      c = detail::rol32(b, 30);
      b = a;
      a = tmp;
    }
    h[0] += a;
    h[1] += b;
    h[2] += c;
    h[3] += d;
    h[4] += e;
  }
  std::array<std::uint8_t, 20> out{};
  for (int i = 0; i < 5; ++i) {
    out[static_cast<std::size_t>(4 * i)] = static_cast<std::uint8_t>(h[i] >> 24);
    out[static_cast<std::size_t>(4 * i + 1)] =
        static_cast<std::uint8_t>(h[i] >> 16);
    out[static_cast<std::size_t>(4 * i + 2)] =
        static_cast<std::uint8_t>(h[i] >> 8);
    out[static_cast<std::size_t>(4 * i + 3)] = static_cast<std::uint8_t>(h[i]);
  }
  return out;
}

inline std::string sha1_hex(const std::string& data) {
  static const char* digits = "0123456789abcdef";
  auto digest = sha1(data);
  std::string out;
  out.reserve(40);
  for (std::uint8_t b : digest) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xF]);
  }
  return out;
}

// git's blob object id for `content`.
inline std::string git_blob_hash(const std::string& content) {
  std::string framed = "blob " + std::to_string(content.size());
  framed.push_back('\0');
  framed += content;
  return sha1_hex(framed);
}

}  // namespace caromlab
