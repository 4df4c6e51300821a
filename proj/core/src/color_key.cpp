#include "rainbow/color_key.hpp"

#include <cstdlib>

#include "rainbow/error.hpp"

namespace rainbow {
namespace {

void append_u32(std::string& out, std::uint32_t v) {
    for (int shift = 24; shift >= 0; shift -= 8) {
        out.push_back(static_cast<char>((v >> shift) & 0xff));
    }
}

std::uint32_t read_u32(std::string_view in, std::size_t pos) {
    if (pos + 4 > in.size()) {
        throw ParameterError("truncated colour key");
    }
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        v = (v << 8) | static_cast<unsigned char>(in[pos + i]);
    }
    return v;
}

std::string magnitude_bytes(const mpz_class& value) {
    std::size_t count = 0;
    const std::size_t bytes = (mpz_sizeinbase(value.get_mpz_t(), 2) + 7) / 8;
    std::string out(bytes, '\0');
    if (sgn(value) != 0) {
        mpz_export(out.data(), &count, 1, 1, 1, 0, value.get_mpz_t());
        out.resize(count);
    } else {
        out.clear();
    }
    return out;
}

std::string magnitude_bytes(std::uint64_t magnitude) {
    std::string out;
    bool leading = true;
    for (int shift = 56; shift >= 0; shift -= 8) {
        const auto byte = static_cast<unsigned char>((magnitude >> shift) & 0xff);
        if (leading && byte == 0) {
            continue;
        }
        leading = false;
        out.push_back(static_cast<char>(byte));
    }
    return out;
}

mpz_class from_magnitude(std::string_view bytes) {
    mpz_class out;
    if (!bytes.empty()) {
        mpz_import(out.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
    }
    return out;
}

std::string describe_view(std::string_view bytes);

}  // namespace

ColorKey encode_integer(std::int64_t value) {
    std::string out{"Z"};
    out.push_back(value < 0 ? '-' : '+');
    // Negating through unsigned arithmetic keeps INT64_MIN well defined.
    const std::uint64_t magnitude =
        value < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(value)
                  : static_cast<std::uint64_t>(value);
    out += magnitude_bytes(magnitude);
    return ColorKey{std::move(out)};
}

ColorKey encode_integer(const mpz_class& value) {
    std::string out{"Z"};
    out.push_back(sgn(value) < 0 ? '-' : '+');
    out += magnitude_bytes(mpz_class{abs(value)});
    return ColorKey{std::move(out)};
}

ColorKey encode_rational(const mpq_class& value) {
    mpq_class canonical{value};
    canonical.canonicalize();
    const std::string num = magnitude_bytes(mpz_class{abs(canonical.get_num())});
    const std::string den = magnitude_bytes(mpz_class{canonical.get_den()});
    std::string out{"Q"};
    out.push_back(sgn(canonical) < 0 ? '-' : '+');
    append_u32(out, static_cast<std::uint32_t>(num.size()));
    out += num;
    out += den;
    return ColorKey{std::move(out)};
}

ColorKey encode_residue(const mpz_class& residue) {
    if (sgn(residue) < 0) {
        throw ParameterError("field residues must be reduced to [0, p)");
    }
    return ColorKey{"F" + magnitude_bytes(residue)};
}

ColorKey encode_index(std::uint64_t index) {
    std::string out{"I"};
    for (int shift = 56; shift >= 0; shift -= 8) {
        out.push_back(static_cast<char>((index >> shift) & 0xff));
    }
    return ColorKey{std::move(out)};
}

ColorKey encode_sequence(std::span<const ColorKey> parts) {
    std::string out{"S"};
    for (const auto& part : parts) {
        append_u32(out, static_cast<std::uint32_t>(part.bytes().size()));
        out += part.bytes();
    }
    return ColorKey{std::move(out)};
}

namespace {

std::string describe_view(std::string_view bytes) {
    if (bytes.empty()) {
        return "<empty>";
    }
    const char tag = bytes[0];
    switch (tag) {
        case 'Z': {
            if (bytes.size() < 2) {
                throw ParameterError("truncated integer key");
            }
            mpz_class v = from_magnitude(bytes.substr(2));
            if (bytes[1] == '-') {
                v = -v;
            }
            return v.get_str();
        }
        case 'Q': {
            if (bytes.size() < 6) {
                throw ParameterError("truncated rational key");
            }
            const std::uint32_t num_len = read_u32(bytes, 2);
            mpq_class v{from_magnitude(bytes.substr(6, num_len)),
                        from_magnitude(bytes.substr(6 + num_len))};
            if (bytes[1] == '-') {
                v = -v;
            }
            return v.get_str();
        }
        case 'F':
            return from_magnitude(bytes.substr(1)).get_str();
        case 'I': {
            std::uint64_t v = 0;
            for (std::size_t i = 1; i < bytes.size(); ++i) {
                v = (v << 8) | static_cast<unsigned char>(bytes[i]);
            }
            return "#" + std::to_string(v);
        }
        case 'S': {
            std::string out = "[";
            std::size_t pos = 1;
            bool first = true;
            while (pos < bytes.size()) {
                const std::uint32_t len = read_u32(bytes, pos);
                pos += 4;
                if (!first) {
                    out += ", ";
                }
                first = false;
                out += describe_view(bytes.substr(pos, len));
                pos += len;
            }
            return out + "]";
        }
        default:
            return "0x" + to_hex(ColorKey{std::string{bytes}});
    }
}

}  // namespace

std::string describe(const ColorKey& key) { return describe_view(key.bytes()); }

std::string to_hex(const ColorKey& key) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(key.bytes().size() * 2);
    for (unsigned char c : key.bytes()) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

}  // namespace rainbow
