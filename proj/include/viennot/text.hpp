#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "viennot/limits.hpp"

namespace viennot {

// Cursor over a piece of input text; every reader reports the byte offset of
// the failure through ParseError.
class TextCursor {
  public:
    explicit TextCursor(std::string_view text) : text_(text) {}

    std::size_t pos() const { return pos_; }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_ws() {
        while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    bool try_consume(char c) {
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!try_consume(c)) fail(std::string("expected '") + c + "' (" + what + ")");
    }

    void expect_end(const char* what) {
        skip_ws();
        if (!at_end()) fail(std::string("trailing input after ") + what);
    }

    long long read_integer(const char* what) {
        skip_ws();
        const std::size_t start = pos_;
        bool negative = false;
        if (try_consume('-')) negative = true;
        else try_consume('+');
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            pos_ = start;
            fail(std::string("expected ") + what);
        }
        long long value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000'000'000'000LL) fail(std::string(what) + " out of range");
            ++pos_;
        }
        return negative ? -value : value;
    }

    int read_positive_int(const char* what) {
        const std::size_t start = pos_;
        const long long v = read_integer(what);
        if (v <= 0 || v > 1'000'000'000) {
            pos_ = start;
            fail(std::string(what) + " must be a positive integer");
        }
        return static_cast<int>(v);
    }

    // Digits only (no sign), as a string; used for big-integer scalars.
    std::string read_digits(const char* what) {
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail(std::string("expected ") + what);
        std::string out;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) out += text_[pos_++];
        return out;
    }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace viennot
