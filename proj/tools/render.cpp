#include "render.hpp"

namespace rigidity::cli {

namespace {

bool is_flat_array(const Report& v) {
  if (!v.is_array()) return false;
  for (const auto& x : v)
    if (x.is_structured()) return false;
  return true;
}

std::string scalar(const Report& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render(const Report& r, const std::string& indent, std::string& out) {
  for (auto it = r.begin(); it != r.end(); ++it) {
    const Report& v = it.value();
    out += indent + it.key() + ":";
    if (!v.is_structured()) {
      out += " " + scalar(v) + "\n";
    } else if (is_flat_array(v)) {
      for (const auto& x : v) out += " " + scalar(x);
      out += "\n";
    } else if (v.is_array()) {
      out += "\n";
      for (const auto& x : v) {
        if (x.is_object()) {
          std::string line;
          for (auto jt = x.begin(); jt != x.end(); ++jt)
            line += (line.empty() ? "" : "  ") + jt.key() + "=" + (jt.value().is_string() ? scalar(jt.value()) : jt.value().dump());
          out += indent + "  " + line + "\n";
        } else if (is_flat_array(x)) {
          std::string line;
          for (const auto& y : x) line += (line.empty() ? "" : " ") + scalar(y);
          out += indent + "  " + line + "\n";
        } else {
          out += indent + "  " + x.dump() + "\n";
        }
      }
    } else {
      out += "\n";
      render(v, indent + "  ", out);
    }
  }
}

}  // namespace

std::string render_text(const Report& r) {
  std::string out;
  render(r, "", out);
  return out;
}

}  // namespace rigidity::cli
