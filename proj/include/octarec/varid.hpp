#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace octarec {

// Errors shared across the library. CLI maps these to exit codes.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnboundVariable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ZeroSubstitution : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ZeroDenominator : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotMutable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OutOfCone : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct WindowTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotAddable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotEvaporable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotLozengeable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Identifier of an initial-data variable. Lattice coordinates are embedded in
// the value so that independent modules constructing "the same" variable agree
// without a shared registry. Plain value type, totally ordered, no interning.
class VarId {
public:
    enum class Kind : std::uint8_t {
        Generic = 0,  // short free-form name, used by tests and the parser
        TJ = 1,       // t_<j>       (A1 initial data)
        TIJ = 2,      // t_<i>_<j>   (stepped-surface initial data)
        Tau = 3,      // tau_<x>_<y>_<z>  (cube-corner initial data)
    };

    VarId() : kind_(Kind::Generic), a_(0), b_(0), c_(0) {}

    static VarId t(int j) { return VarId(Kind::TJ, j, 0, 0); }
    static VarId t(int i, int j) { return VarId(Kind::TIJ, i, j, 0); }
    static VarId tau(int x, int y, int z) { return VarId(Kind::Tau, x, y, z); }

    // A short generic name (at most 8 characters, [A-Za-z][A-Za-z0-9]*).
    static VarId named(const std::string& name) {
        if (name.empty() || name.size() > 8)
            throw ParseError("variable name must have 1..8 characters: '" + name + "'");
        std::uint64_t packed = 0;
        for (std::size_t i = 0; i < name.size(); ++i) {
            unsigned char ch = static_cast<unsigned char>(name[i]);
            bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
                      (i > 0 && ch >= '0' && ch <= '9');
            if (!ok) throw ParseError("bad character in variable name: '" + name + "'");
            packed |= static_cast<std::uint64_t>(ch) << (8 * i);
        }
        VarId v;
        v.kind_ = Kind::Generic;
        v.a_ = static_cast<std::int32_t>(packed & 0xffffffffu);
        v.b_ = static_cast<std::int32_t>(packed >> 32);
        return v;
    }

    Kind kind() const { return kind_; }
    int i() const { return a_; }
    int j() const { return b_; }
    int x() const { return a_; }
    int y() const { return b_; }
    int z() const { return c_; }

    std::string str() const {
        switch (kind_) {
            case Kind::Generic: {
                std::string s;
                std::uint64_t packed = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(b_)) << 32) |
                                       static_cast<std::uint32_t>(a_);
                for (int i = 0; i < 8; ++i) {
                    char ch = static_cast<char>((packed >> (8 * i)) & 0xff);
                    if (ch == 0) break;
                    s.push_back(ch);
                }
                return s;
            }
            case Kind::TJ: return "t_" + std::to_string(a_);
            case Kind::TIJ: return "t_" + std::to_string(a_) + "_" + std::to_string(b_);
            case Kind::Tau:
                return "tau_" + std::to_string(a_) + "_" + std::to_string(b_) + "_" +
                       std::to_string(c_);
        }
        return "?";
    }

    // Parses the textual forms produced by str().
    static VarId parse(const std::string& s) {
        auto split = [&](const std::string& body) {
            std::array<long, 3> idx{0, 0, 0};
            int n = 0;
            std::size_t pos = 0;
            while (pos < body.size()) {
                if (n == 3) throw ParseError("too many indices in variable: " + s);
                std::size_t next = body.find('_', pos);
                std::string piece = body.substr(pos, next == std::string::npos ? next : next - pos);
                if (piece.empty()) throw ParseError("empty index in variable: " + s);
                std::size_t used = 0;
                idx[n++] = std::stol(piece, &used);
                if (used != piece.size()) throw ParseError("bad index in variable: " + s);
                if (next == std::string::npos) break;
                pos = next + 1;
            }
            return std::pair<std::array<long, 3>, int>(idx, n);
        };
        if (s.rfind("tau_", 0) == 0) {
            auto [idx, n] = split(s.substr(4));
            if (n != 3) throw ParseError("tau variable needs three indices: " + s);
            return tau(static_cast<int>(idx[0]), static_cast<int>(idx[1]), static_cast<int>(idx[2]));
        }
        if (s.rfind("t_", 0) == 0) {
            auto [idx, n] = split(s.substr(2));
            if (n == 1) return t(static_cast<int>(idx[0]));
            if (n == 2) return t(static_cast<int>(idx[0]), static_cast<int>(idx[1]));
            throw ParseError("t variable needs one or two indices: " + s);
        }
        return named(s);
    }

    friend bool operator==(const VarId& lhs, const VarId& rhs) = default;
    friend std::strong_ordering operator<=>(const VarId& lhs, const VarId& rhs) = default;

private:
    VarId(Kind k, int a, int b, int c) : kind_(k), a_(a), b_(b), c_(c) {}

    Kind kind_;
    std::int32_t a_, b_, c_;
};

}  // namespace octarec
