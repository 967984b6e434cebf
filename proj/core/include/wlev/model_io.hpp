#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "wlev/error_model.hpp"

namespace wlev {

/// Model file format: a UTF-8 JSON object with the keys "insert", "delete"
/// and "substitute". The first two map single-symbol strings to numbers; the
/// last maps two-symbol strings (typed symbol, then intended symbol) to
/// numbers. Keys are emitted in ascending symbol order and numbers in their
/// shortest round-trip decimal form, so equal models serialize to equal bytes.
[[nodiscard]] std::string serialize(const ErrorModel& model);

/// Strict reader for the format above. Unknown or repeated keys, keys of the
/// wrong symbol length, non-numeric values and frequencies outside [0, 1) are
/// rejected with a ParseError naming the offending entry. A missing table
/// reads as empty.
[[nodiscard]] ErrorModel deserialize(std::string_view document);

[[nodiscard]] ErrorModel load_model(const std::filesystem::path& path);
void save_model(const ErrorModel& model, const std::filesystem::path& path);

}  // namespace wlev
