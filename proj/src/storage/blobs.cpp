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

#include "g2g/storage/blobs.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <sstream>

#include "g2g/core/crypto.hpp"

namespace g2g {

namespace {

Result<std::string> strip_jpeg(std::string_view in) {
  auto byte = [&](std::size_t i) { return static_cast<unsigned char>(in[i]); };
  if (in.size() < 4 || byte(0) != 0xFF || byte(1) != 0xD8) {
    return Error(ErrorCode::kInvalidValue, "not a JPEG stream");
  }
  std::string out(in.substr(0, 2));
  std::size_t pos = 2;
  while (pos + 4 <= in.size()) {
    if (byte(pos) != 0xFF) return Error(ErrorCode::kInvalidValue, "corrupt JPEG segment");
    unsigned char marker = byte(pos + 1);
    if (marker == 0xDA) {
      // Start of scan: entropy-coded data runs to the end.
      out.append(in.substr(pos));
      return out;
    }
    std::size_t len = (static_cast<std::size_t>(byte(pos + 2)) << 8) | byte(pos + 3);
    if (len < 2 || pos + 2 + len > in.size()) return Error(ErrorCode::kInvalidValue, "truncated JPEG");
    // APP1..APP15 (EXIF, XMP, ...) and COM are dropped; APP0 (JFIF) stays.
    bool drop = (marker >= 0xE1 && marker <= 0xEF) || marker == 0xFE;
    if (!drop) out.append(in.substr(pos, 2 + len));
    pos += 2 + len;
  }
  return Error(ErrorCode::kInvalidValue, "JPEG without image data");
}

Result<std::string> strip_png(std::string_view in) {
  static constexpr std::string_view kSig("\x89PNG\r\n\x1a\n", 8);
  if (in.substr(0, 8) != kSig) return Error(ErrorCode::kInvalidValue, "not a PNG stream");
  std::string out(kSig);
  std::size_t pos = 8;
  while (pos + 12 <= in.size()) {
    auto b = [&](std::size_t i) { return static_cast<std::uint32_t>(static_cast<unsigned char>(in[i])); };
    std::uint32_t len = (b(pos) << 24) | (b(pos + 1) << 16) | (b(pos + 2) << 8) | b(pos + 3);
    if (pos + 12 + len > in.size()) return Error(ErrorCode::kInvalidValue, "truncated PNG");
    std::string_view type = in.substr(pos + 4, 4);
    bool drop = type == "tEXt" || type == "zTXt" || type == "iTXt" || type == "eXIf" || type == "tIME";
    if (!drop) out.append(in.substr(pos, 12 + len));
    pos += 12 + len;
    if (type == "IEND") return out;
  }
  return Error(ErrorCode::kInvalidValue, "PNG without IEND");
}

}  // namespace

Result<std::string> strip_image_metadata(std::string_view bytes, std::string_view content_type) {
  if (content_type == "image/jpeg" || content_type == "image/jpg") return strip_jpeg(bytes);
  if (content_type == "image/png") return strip_png(bytes);
  return Error(ErrorCode::kInvalidValue,
               "unsupported media type '" + std::string(content_type) + "'; images only (jpeg, png)");
}

std::filesystem::path BlobStore::file_for(std::string_view digest) const {
  std::string d(digest);
  return root_ / d.substr(0, 2) / d;
}

Result<StoredBlob> BlobStore::put_image(std::string_view bytes, std::string_view content_type) {
  auto stripped = strip_image_metadata(bytes, content_type);
  if (!stripped) return stripped.error();
  StoredBlob blob;
  blob.digest = sha256_hex(*stripped);
  blob.content_type = content_type == "image/jpg" ? "image/jpeg" : std::string(content_type);
  blob.size = stripped->size();
  auto target = file_for(blob.digest);
  if (std::filesystem::exists(target)) return blob;
  std::error_code ec;
  std::filesystem::create_directories(target.parent_path(), ec);
  if (ec) return Error(ErrorCode::kIo, "cannot create blob directory: " + ec.message());
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(stripped->data(), static_cast<std::streamsize>(stripped->size()));
    if (!out) return Error(ErrorCode::kIo, "cannot write blob");
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) return Error(ErrorCode::kIo, "cannot publish blob: " + ec.message());
  return blob;
}

Result<std::string> BlobStore::read(std::string_view digest) const {
  if (digest.size() != 64 ||
      !std::all_of(digest.begin(), digest.end(), [](char c) { return std::isxdigit(static_cast<unsigned char>(c)); })) {
    return Error(ErrorCode::kNotFound, "no such blob");
  }
  std::ifstream in(file_for(digest), std::ios::binary);
  if (!in) return Error(ErrorCode::kNotFound, "no such blob");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

bool BlobStore::contains(std::string_view digest) const {
  if (digest.size() != 64) return false;
  return std::filesystem::exists(file_for(digest));
}

}  // namespace g2g
