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
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "g2g/core/result.hpp"

namespace g2g {

struct StoredBlob {
  std::string digest;  // sha256 of the stripped bytes
  std::string content_type;
  std::size_t size = 0;
};

// Removes EXIF/XMP/comment segments from JPEG and textual/EXIF chunks from
// PNG. Anything that is not a JPEG or PNG is rejected.
Result<std::string> strip_image_metadata(std::string_view bytes, std::string_view content_type);

// Uploads are tracked per uploader as blob records keyed by this id.
inline std::string blob_record_id(std::string_view owner, std::string_view digest) {
  return std::string(owner) + ":" + std::string(digest);
}

// Content-addressed files beside the database: <root>/<aa>/<digest>.
class BlobStore {
 public:
  explicit BlobStore(std::filesystem::path root) : root_(std::move(root)) {}

  // Strips metadata, then writes (idempotent for equal content).
  Result<StoredBlob> put_image(std::string_view bytes, std::string_view content_type);
  Result<std::string> read(std::string_view digest) const;
  bool contains(std::string_view digest) const;

  static std::filesystem::path root_for(const std::filesystem::path& db_path) {
    return std::filesystem::path(db_path.string() + ".blobs");
  }

 private:
  std::filesystem::path file_for(std::string_view digest) const;
  std::filesystem::path root_;
};

}  // namespace g2g
