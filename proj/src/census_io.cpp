// Census file:
//   #cubic-census v1 sign=<+|-> xmax=<int> count=<int>
//   a b c d disc cyclic s2 s3 s5 s7        (one line per record)
//   #sha256=<hex of the record lines, newlines included>

#include <openssl/evp.h>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cubic/census.hpp"

namespace cubic {

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256 failed");
    }
    std::string hex;
    hex.reserve(2 * len);
    constexpr char kDigits[] = "0123456789abcdef";
    for (unsigned int i = 0; i < len; ++i) {
        hex.push_back(kDigits[digest[i] >> 4]);
        hex.push_back(kDigits[digest[i] & 15]);
    }
    return hex;
}

namespace {

constexpr std::string_view kMagic = "#cubic-census";
constexpr std::string_view kVersion = "v1";

std::string body_of(const std::vector<FieldRecord>& records) {
    std::string body;
    body.reserve(records.size() * 40);
    char line[256];
    for (const auto& r : records) {
        const int n = std::snprintf(line, sizeof line, "%lld %lld %lld %lld %lld %d %s %s %s %s\n",
                                    static_cast<long long>(r.form.a), static_cast<long long>(r.form.b),
                                    static_cast<long long>(r.form.c), static_cast<long long>(r.form.d),
                                    static_cast<long long>(r.disc), r.cyclic ? 1 : 0,
                                    to_token(r.splitting[0]).data(), to_token(r.splitting[1]).data(),
                                    to_token(r.splitting[2]).data(), to_token(r.splitting[3]).data());
        body.append(line, static_cast<std::size_t>(n));
    }
    return body;
}

i64 parse_int(std::string_view tok, const char* what) {
    i64 v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw CensusFormatError(std::string("malformed ") + what + ": '" + std::string(tok) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && line[i] == ' ') ++i;
        const std::size_t j = line.find(' ', i);
        const std::size_t end = j == std::string_view::npos ? line.size() : j;
        if (end > i) out.push_back(line.substr(i, end - i));
        i = end;
    }
    return out;
}

std::string_view value_of(std::string_view field, std::string_view key) {
    if (field.substr(0, key.size()) != key || field.size() <= key.size() || field[key.size()] != '=') {
        throw CensusFormatError("malformed header field '" + std::string(field) + "'");
    }
    return field.substr(key.size() + 1);
}

}  // namespace

std::string serialize(const CensusFile& census) {
    const std::string body = body_of(census.records);
    std::string out;
    out += kMagic;
    out += ' ';
    out += kVersion;
    out += " sign=";
    out += sign_char(census.sign);
    out += " xmax=" + std::to_string(census.xmax);
    out += " count=" + std::to_string(census.records.size());
    out += '\n';
    out += body;
    out += "#sha256=" + sha256_hex(body) + "\n";
    return out;
}

CensusFile deserialize(const std::string& text) {
    const std::size_t header_end = text.find('\n');
    if (header_end == std::string::npos) throw CensusFormatError("missing header line");
    const auto header = split(std::string_view(text).substr(0, header_end));
    if (header.size() != 5 || header[0] != kMagic) throw CensusFormatError("malformed header");
    if (header[1] != kVersion) throw CensusFormatError("unsupported version '" + std::string(header[1]) + "'");

    CensusFile out;
    const auto sign = value_of(header[2], "sign");
    if (sign == "+") out.sign = Sign::Positive;
    else if (sign == "-") out.sign = Sign::Negative;
    else throw CensusFormatError("malformed sign");
    out.xmax = parse_int(value_of(header[3], "xmax"), "xmax");
    const i64 count = parse_int(value_of(header[4], "count"), "count");
    if (out.xmax < 1 || count < 0) throw CensusFormatError("header values out of range");

    // trailer is the last line
    if (text.empty() || text.back() != '\n') throw CensusFormatError("missing trailing newline");
    const std::size_t trailer_start = text.rfind('\n', text.size() - 2);
    if (trailer_start == std::string::npos || trailer_start < header_end) throw CensusFormatError("missing checksum line");
    const std::string_view trailer = std::string_view(text).substr(trailer_start + 1, text.size() - trailer_start - 2);
    constexpr std::string_view kSum = "#sha256=";
    if (trailer.substr(0, kSum.size()) != kSum) throw CensusFormatError("missing checksum line");
    const std::string body = text.substr(header_end + 1, trailer_start - header_end);
    if (sha256_hex(body) != trailer.substr(kSum.size())) throw CensusFormatError("checksum mismatch");

    std::string_view rest = body;
    while (!rest.empty()) {
        const std::size_t nl = rest.find('\n');
        const auto line = rest.substr(0, nl);
        rest.remove_prefix(nl + 1);
        const auto tok = split(line);
        if (tok.size() != 10) throw CensusFormatError("malformed record line '" + std::string(line) + "'");
        FieldRecord r;
        r.form = {parse_int(tok[0], "a"), parse_int(tok[1], "b"), parse_int(tok[2], "c"), parse_int(tok[3], "d")};
        r.disc = parse_int(tok[4], "disc");
        const i64 cyc = parse_int(tok[5], "cyclic");
        if (cyc != 0 && cyc != 1) throw CensusFormatError("malformed cyclic flag");
        r.cyclic = cyc == 1;
        for (std::size_t i = 0; i < 4; ++i) {
            const auto s = parse_symbol(tok[6 + i]);
            if (!s || tok[6 + i] != to_token(*s)) throw CensusFormatError("malformed splitting symbol");
            r.splitting[i] = *s;
        }
        if (discriminant(r.form) != r.disc) throw CensusFormatError("record discriminant does not match its form");
        if (!out.records.empty() && !record_less(out.records.back(), r)) throw CensusFormatError("records out of order");
        out.records.push_back(r);
    }
    if (static_cast<i64>(out.records.size()) != count) throw CensusFormatError("record count does not match header");
    return out;
}

void save(const CensusFile& census, const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
    const std::string text = serialize(census);
    os.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!os) throw std::runtime_error("write failed for " + path.string());
}

CensusFile load(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << is.rdbuf();
    return deserialize(ss.str());
}

}  // namespace cubic
