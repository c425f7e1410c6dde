#include "nvodmr/io/manifest.hpp"

#include "nvodmr/io/config_io.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <ctime>
#include <iomanip>
#include <memory>
#include <sstream>
#include <stdexcept>

#ifndef NVODMR_VERSION
#define NVODMR_VERSION "0.0.0"
#endif

namespace nvodmr::io {

std::string tool_version() { return NVODMR_VERSION; }

std::string sha256_hex(const std::string& data) {
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1) {
        throw std::runtime_error("SHA-256 digest failed");
    }
    std::ostringstream os;
    os << std::hex << std::setfill('0');
    for (unsigned int i = 0; i < len; ++i) os << std::setw(2) << static_cast<int>(digest[i]);
    return os.str();
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

RunManifest make_manifest(const SimulationConfig& config, std::vector<std::string> outputs) {
    RunManifest m;
    m.config_json = config_to_json(config).dump();
    m.config_sha256 = sha256_hex(m.config_json);
    m.seed = config.seed;
    m.tool_version = tool_version();
    m.timestamp = utc_timestamp();
    m.outputs = std::move(outputs);
    return m;
}

std::vector<std::string> manifest_lines(const RunManifest& m) {
    std::string outputs;
    for (const auto& o : m.outputs) {
        if (!outputs.empty()) outputs += ' ';
        outputs += o;
    }
    return {
        "# nvodmr " + m.tool_version,
        "# timestamp: " + m.timestamp,
        "# config_sha256: " + m.config_sha256,
        "# seed: " + std::to_string(m.seed),
        "# outputs: " + outputs,
        "# config: " + m.config_json,
    };
}

}  // namespace nvodmr::io
