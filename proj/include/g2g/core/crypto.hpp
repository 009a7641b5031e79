/*
 * Copyright 2026 The g2g Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <mutex>
#include <span>
#include <string>
#include <string_view>

namespace g2g {

// Lower-case hex SHA-256.
std::string sha256_hex(std::string_view data);
std::string sha256_hex(std::span<const std::uint8_t> data);
std::string hmac_sha256_hex(std::string_view key, std::string_view data);
// Cryptographically random bytes, hex encoded (2 * n_bytes characters).
std::string random_hex(std::size_t n_bytes);

// Opaque id source. Production ids are random; the deterministic variant
// yields "<prefix>_<counter>" sequences for reproducible fixtures.
class IdSource {
 public:
  virtual ~IdSource() = default;
  virtual std::string next(std::string_view prefix) = 0;
};

class RandomIds final : public IdSource {
 public:
  std::string next(std::string_view prefix) override;
};

class SequentialIds final : public IdSource {
 public:
  std::string next(std::string_view prefix) override;

 private:
  std::mutex mu_;
  std::uint64_t counter_ = 0;
};

}  // namespace g2g
