#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rainbow {

/// Canonical byte serialization of an exact colour value.
///
/// Two keys compare equal iff the colour values they encode are equal. Every
/// encoder below emits a type tag followed by a canonical body, so values of
/// different kinds never collide.
class ColorKey {
public:
    ColorKey() = default;
    explicit ColorKey(std::string bytes) : bytes_(std::move(bytes)) {}

    const std::string& bytes() const noexcept { return bytes_; }
    bool empty() const noexcept { return bytes_.empty(); }

    friend bool operator==(const ColorKey&, const ColorKey&) = default;
    friend std::strong_ordering operator<=>(const ColorKey& a, const ColorKey& b) {
        return a.bytes_.compare(b.bytes_) <=> 0;
    }

private:
    std::string bytes_;
};

struct ColorKeyHash {
    std::size_t operator()(const ColorKey& key) const noexcept {
        return std::hash<std::string>{}(key.bytes());
    }
};

// Tag 'Z': sign byte then big-endian magnitude with no leading zero bytes.
// The int64 and mpz overloads produce identical bytes for equal values.
ColorKey encode_integer(std::int64_t value);
ColorKey encode_integer(const mpz_class& value);

// Tag 'Q': sign, 4-byte numerator length, numerator magnitude, denominator
// magnitude. The value is canonicalized before encoding.
ColorKey encode_rational(const mpq_class& value);

// Tag 'F': a reduced residue of a prime field.
ColorKey encode_residue(const mpz_class& residue);

// Tag 'I': an opaque 64-bit identifier (fixture colourings).
ColorKey encode_index(std::uint64_t index);

// Tag 'S' followed by length-prefixed parts; an ordered tuple of keys.
ColorKey encode_sequence(std::span<const ColorKey> parts);

/// Human-readable rendering of a key, e.g. "7", "-3/4", "[1/2, 1/4]".
std::string describe(const ColorKey& key);

/// Lower-case hex dump of the raw bytes.
std::string to_hex(const ColorKey& key);

}  // namespace rainbow

template <>
struct std::hash<rainbow::ColorKey> : rainbow::ColorKeyHash {};
