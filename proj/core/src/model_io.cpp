#include "wlev/model_io.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "wlev/error.hpp"

namespace wlev {

namespace {

using nlohmann::json;

enum class Table { Insert, Delete, Substitute };

const char* table_name(Table t) {
    switch (t) {
    case Table::Insert: return "insert";
    case Table::Delete: return "delete";
    case Table::Substitute: return "substitute";
    }
    return "?";
}

// SAX consumer for the fixed two-level document shape. The DOM parser would
// silently keep the last of two duplicate keys, so the reader works on events.
class ModelReader final : public nlohmann::json_sax<json> {
public:
    bool null() override { return scalar_error("null"); }
    bool boolean(bool) override { return scalar_error("boolean"); }
    bool number_integer(number_integer_t v) override { return number(static_cast<double>(v)); }
    bool number_unsigned(number_unsigned_t v) override { return number(static_cast<double>(v)); }
    bool number_float(number_float_t v, const string_t&) override { return number(v); }
    bool string(string_t&) override { return scalar_error("string"); }
    bool binary(binary_t&) override { return scalar_error("binary"); }

    bool start_object(std::size_t) override {
        if (depth_ == 0) {
            depth_ = 1;
            return true;
        }
        if (depth_ == 1 && table_) {
            depth_ = 2;
            return true;
        }
        fail("unexpected object" + where());
    }

    bool end_object() override {
        if (depth_ == 2) {
            table_.reset();
            depth_ = 1;
        } else {
            depth_ = 0;
        }
        return true;
    }

    bool start_array(std::size_t) override { fail("unexpected array" + where()); }
    bool end_array() override { return true; }

    bool key(string_t& raw) override {
        if (depth_ == 1) {
            Table t;
            if (raw == "insert") {
                t = Table::Insert;
            } else if (raw == "delete") {
                t = Table::Delete;
            } else if (raw == "substitute") {
                t = Table::Substitute;
            } else {
                fail("unknown top-level key \"" + raw + "\"");
            }
            if (!seen_tables_.insert(t).second) fail("duplicate top-level key \"" + raw + "\"");
            table_ = t;
            return true;
        }
        Word symbols;
        try {
            symbols = decode_utf8(raw);
        } catch (const ParseError& e) {
            fail(std::string("key in ") + table_name(*table_) + ": " + e.what());
        }
        const std::size_t expected = *table_ == Table::Substitute ? 2 : 1;
        if (symbols.size() != expected) {
            fail(std::string(table_name(*table_)) + "[\"" + raw + "\"]: key must be " + std::to_string(expected) +
                 (expected == 1 ? " symbol" : " symbols"));
        }
        if (!seen_keys_.insert({*table_, symbols}).second) {
            fail("duplicate key " + std::string(table_name(*table_)) + "[\"" + raw + "\"]");
        }
        key_ = std::move(symbols);
        raw_key_ = raw;
        ++entry_;
        return true;
    }

    bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& ex) override {
        throw ParseError("malformed model document at byte " + std::to_string(position) + ": " + ex.what());
    }

    ErrorModel finish() {
        try {
            return ErrorModel(std::move(insert_), std::move(delete_), std::move(substitute_));
        } catch (const InvalidModel& e) {
            throw ParseError(e.what());
        }
    }

private:
    [[noreturn]] static void fail(const std::string& message) { throw ParseError("model document: " + message); }

    std::string where() const {
        if (depth_ == 2 && table_) return " at " + std::string(table_name(*table_)) + "[\"" + raw_key_ + "\"]";
        if (table_) return std::string(" at \"") + table_name(*table_) + "\"";
        return " at top level";
    }

    bool scalar_error(const char* kind) { fail(std::string("unexpected ") + kind + where()); }

    bool number(double v) {
        if (depth_ != 2) fail("unexpected number" + where());
        if (!(v >= 0.0 && v < 1.0)) {
            std::ostringstream os;
            os << v;
            fail("frequency " + os.str() + where() + " (entry " + std::to_string(entry_) + ") is outside [0, 1)");
        }
        switch (*table_) {
        case Table::Insert: insert_.emplace(key_[0], v); break;
        case Table::Delete: delete_.emplace(key_[0], v); break;
        case Table::Substitute: substitute_.emplace(SymbolPair{key_[0], key_[1]}, v); break;
        }
        return true;
    }

    int depth_ = 0;
    std::optional<Table> table_;
    std::set<Table> seen_tables_;
    std::set<std::pair<Table, Word>> seen_keys_;
    Word key_;
    std::string raw_key_;
    std::size_t entry_ = 0;
    ErrorModel::SymbolTable insert_;
    ErrorModel::SymbolTable delete_;
    ErrorModel::PairTable substitute_;
};

}  // namespace

std::string serialize(const ErrorModel& model) {
    // nlohmann::json objects are std::map-backed: keys come out in UTF-8 byte
    // order, which equals scalar-value order.
    json doc = {{"insert", json::object()}, {"delete", json::object()}, {"substitute", json::object()}};
    for (const auto& [c, f] : model.insert_table()) doc["insert"][encode_utf8(c)] = f;
    for (const auto& [c, f] : model.delete_table()) doc["delete"][encode_utf8(c)] = f;
    for (const auto& [k, f] : model.substitute_table()) {
        doc["substitute"][encode_utf8(k.first) + encode_utf8(k.second)] = f;
    }
    return doc.dump(2) + "\n";
}

ErrorModel deserialize(std::string_view document) {
    ModelReader reader;
    const bool ok = json::sax_parse(document.begin(), document.end(), &reader);
    if (!ok) throw ParseError("malformed model document");
    return reader.finish();
}

ErrorModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open model file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return deserialize(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void save_model(const ErrorModel& model, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write model file " + path.string());
    out << serialize(model);
    if (!out) throw Error("failed writing model file " + path.string());
}

}  // namespace wlev
