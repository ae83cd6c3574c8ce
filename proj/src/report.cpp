#include "xxl/report.hpp"

#include <fmt/format.h>
#include <openssl/evp.h>

#include <cmath>
#include <memory>
#include <stdexcept>

namespace xxl {

std::string sha256_hex(std::string_view bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &length) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::string out;
  for (unsigned int i = 0; i < length; ++i) out += fmt::format("{:02x}", digest[i]);
  return out;
}

std::string decimal(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", value);
}

Json angle_json(const RationalAngle& angle) {
  Json j;
  j["pi"] = angle.fraction();
  j["strict"] = angle.strict();
  j["radians"] = angle.is_infinite() ? std::string("inf") : decimal(angle.radians());
  return j;
}

Json certified_angle_json(const CertifiedAngle& angle) {
  Json j;
  j["lower"] = angle.interval().lower().to_string(40, MPFR_RNDD);
  j["upper"] = angle.interval().upper().to_string(40, MPFR_RNDU);
  j["width"] = angle.interval().width().to_string(3, MPFR_RNDU);
  j["precision_bits"] = static_cast<long>(angle.precision());
  if (angle.exact()) j["exact"] = angle_json(*angle.exact());
  j["provenance"] = angle.provenance();
  return j;
}

Json report_header(std::string_view command, std::string_view input) {
  Json j;
  j["schema"] = report_schema;
  j["tool_version"] = tool_version;
  j["command"] = command;
  j["input_sha256"] = sha256_hex(input);
  return j;
}

namespace {

bool is_angle(const Json& j) {
  return j.is_object() && j.size() == 3 && j.contains("pi") && j.contains("strict") && j.contains("radians");
}

std::string scalar(const Json& j) {
  if (is_angle(j)) {
    std::string s = j["pi"].get<std::string>();
    if (j["strict"].get<bool>()) s += " (strict)";
    const auto r = j["radians"].get<std::string>();
    if (r != "inf" && s.rfind("π") != std::string::npos) s += " ≈ " + r.substr(0, 11);
    return s;
  }
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_scalar(const Json& j) { return is_angle(j) || !j.is_structured(); }

void render(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_scalar(value)) {
        out += pad + key + ": " + scalar(value) + "\n";
      } else if (value.empty()) {
        out += pad + key + ": (none)\n";
      } else {
        out += pad + key + ":\n";
        render(value, indent + 2, out);
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (is_scalar(value)) {
        out += pad + "- " + scalar(value) + "\n";
      } else {
        std::string inner;
        render(value, indent + 2, inner);
        out += pad + "-" + inner.substr(static_cast<std::size_t>(indent) + 1);
      }
    }
  } else {
    out += pad + scalar(j) + "\n";
  }
}

}  // namespace

std::string render_human(const Json& report) {
  std::string out;
  render(report, 0, out);
  return out;
}

}  // namespace xxl
