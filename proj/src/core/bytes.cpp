// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/bytes.hpp"

#include <sodium.h>

namespace zkace {

std::string base64_encode(const Bytes& data) {
  std::string out(sodium_base64_encoded_len(data.size(),
                                            sodium_base64_VARIANT_ORIGINAL),
                  '\0');
  sodium_bin2base64(out.data(), out.size(), data.data(), data.size(),
                    sodium_base64_VARIANT_ORIGINAL);
  out.resize(out.find('\0') == std::string::npos ? out.size()
                                                 : out.find('\0'));
  return out;
}

Bytes base64_decode(const std::string& s) {
  Bytes out(s.size());
  size_t len = 0;
  if (sodium_base642bin(out.data(), out.size(), s.data(), s.size(), nullptr,
                        &len, nullptr, sodium_base64_VARIANT_ORIGINAL) != 0) {
    throw std::invalid_argument("invalid base64");
  }
  out.resize(len);
  return out;
}

}  // namespace zkace
