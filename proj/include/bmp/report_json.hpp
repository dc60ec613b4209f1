#pragma once

#include "bmp/types.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace bmp {

/// JSON document with byte-stable serialization: object keys sorted, doubles
/// printed with 17 significant digits (round-trip exact), two-space indent.
class JsonValue {
public:
    using Object = std::map<std::string, JsonValue>;
    using Array = std::vector<JsonValue>;

    JsonValue() : v_(nullptr) {}
    JsonValue(bool b) : v_(b) {}
    JsonValue(int i) : v_(static_cast<std::int64_t>(i)) {}
    JsonValue(std::int64_t i) : v_(i) {}
    JsonValue(double d) : v_(d) {}
    JsonValue(const char* s) : v_(std::string(s)) {}
    JsonValue(std::string s) : v_(std::move(s)) {}
    JsonValue(Object o) : v_(std::move(o)) {}
    JsonValue(Array a) : v_(std::move(a)) {}

    JsonValue& operator[](const std::string& key);
    bool is_object() const { return std::holds_alternative<Object>(v_); }

    void write(std::ostream& os, int indent = 0) const;
    std::string dump() const;

    static std::string format_double(double d);

private:
    std::variant<std::nullptr_t, bool, std::int64_t, double, std::string, Object, Array> v_;
};

/// Row-major CSV with 17-significant-digit floats.
void write_csv(std::ostream& os, const Matrix& m);
void write_csv(std::ostream& os, const Vector& v);

} // namespace bmp
