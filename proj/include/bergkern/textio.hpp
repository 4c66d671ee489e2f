#pragma once

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace bergkern {

// 17 significant digits: round-trips doubles exactly and is locale-independent.
inline std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

inline std::string fmt_int(long long x) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%lld", x);
  return buf;
}

// Minimal deterministic JSON emitter with insertion-ordered objects and
// fmt17 numbers. Non-finite doubles emit as null (JSON has no inf/nan).
class JsonOut {
 public:
  static JsonOut num(double v) {
    JsonOut j;
    j.text_ = (v == v && v - v == 0.0) ? fmt17(v) : "null";
    return j;
  }
  static JsonOut integer(long long v) {
    JsonOut j;
    j.text_ = fmt_int(v);
    return j;
  }
  static JsonOut boolean(bool b) {
    JsonOut j;
    j.text_ = b ? "true" : "false";
    return j;
  }
  static JsonOut null() {
    JsonOut j;
    j.text_ = "null";
    return j;
  }
  static JsonOut str(const std::string& s) {
    JsonOut j;
    j.text_ = quote(s);
    return j;
  }
  static JsonOut array() {
    JsonOut j;
    j.is_array_ = true;
    return j;
  }
  static JsonOut object() {
    JsonOut j;
    j.is_object_ = true;
    return j;
  }

  JsonOut& push(JsonOut v) {
    items_.push_back({std::string(), std::move(v)});
    return *this;
  }
  JsonOut& set(const std::string& key, JsonOut v) {
    items_.push_back({key, std::move(v)});
    return *this;
  }

  std::string dump() const {
    if (is_array_ || is_object_) {
      std::string out(1, is_array_ ? '[' : '{');
      for (size_t i = 0; i < items_.size(); ++i) {
        if (i) out += ',';
        if (is_object_) {
          out += quote(items_[i].first);
          out += ':';
        }
        out += items_[i].second.dump();
      }
      out += is_array_ ? ']' : '}';
      return out;
    }
    return text_;
  }

 private:
  static std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof(buf), "\\u%04x", c);
            out += buf;
          } else {
            out += c;
          }
      }
    }
    out += '"';
    return out;
  }

  std::string text_ = "null";
  bool is_array_ = false;
  bool is_object_ = false;
  std::vector<std::pair<std::string, JsonOut>> items_;
};

// One CSV row from already-formatted cells; '.' decimal separator comes from
// fmt17, no locale involvement anywhere.
inline std::string csv_row(const std::vector<std::string>& cells) {
  std::string out;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  out += '\n';
  return out;
}

}  // namespace bergkern
