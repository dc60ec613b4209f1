#include "bmp/report_json.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace bmp {

namespace {

void write_escaped(std::ostream& os, const std::string& s) {
    os << '"';
    for (const char c : s) {
        switch (c) {
            case '"': os << "\\\""; break;
            case '\\': os << "\\\\"; break;
            case '\n': os << "\\n"; break;
            case '\r': os << "\\r"; break;
            case '\t': os << "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    os << buf;
                } else {
                    os << c;
                }
        }
    }
    os << '"';
}

void pad(std::ostream& os, int indent) {
    for (int i = 0; i < indent; ++i) os << "  ";
}

} // namespace

std::string JsonValue::format_double(double d) {
    if (!std::isfinite(d)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", d);
    return buf;
}

JsonValue& JsonValue::operator[](const std::string& key) {
    if (!is_object()) v_ = Object{};
    return std::get<Object>(v_)[key];
}

void JsonValue::write(std::ostream& os, int indent) const {
    if (std::holds_alternative<std::nullptr_t>(v_)) {
        os << "null";
    } else if (std::holds_alternative<bool>(v_)) {
        os << (std::get<bool>(v_) ? "true" : "false");
    } else if (std::holds_alternative<std::int64_t>(v_)) {
        os << std::get<std::int64_t>(v_);
    } else if (std::holds_alternative<double>(v_)) {
        os << format_double(std::get<double>(v_));
    } else if (std::holds_alternative<std::string>(v_)) {
        write_escaped(os, std::get<std::string>(v_));
    } else if (std::holds_alternative<Object>(v_)) {
        const Object& o = std::get<Object>(v_);
        if (o.empty()) {
            os << "{}";
            return;
        }
        os << "{\n";
        std::size_t i = 0;
        for (const auto& [k, val] : o) {
            pad(os, indent + 1);
            write_escaped(os, k);
            os << ": ";
            val.write(os, indent + 1);
            if (++i < o.size()) os << ',';
            os << '\n';
        }
        pad(os, indent);
        os << '}';
    } else {
        const Array& a = std::get<Array>(v_);
        if (a.empty()) {
            os << "[]";
            return;
        }
        os << "[\n";
        for (std::size_t i = 0; i < a.size(); ++i) {
            pad(os, indent + 1);
            a[i].write(os, indent + 1);
            if (i + 1 < a.size()) os << ',';
            os << '\n';
        }
        pad(os, indent);
        os << ']';
    }
}

std::string JsonValue::dump() const {
    std::ostringstream os;
    write(os);
    os << '\n';
    return os.str();
}

void write_csv(std::ostream& os, const Matrix& m) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c) os << ',';
            os << JsonValue::format_double(m(r, c));
        }
        os << '\n';
    }
}

void write_csv(std::ostream& os, const Vector& v) {
    for (Eigen::Index r = 0; r < v.size(); ++r) os << JsonValue::format_double(v[r]) << '\n';
}

} // namespace bmp
