#include "skoszul/parser.hpp"

#include <cctype>

namespace skoszul {
namespace {

class Parser {
public:
    Parser(SuperPoly::Registry reg, const RingSpec& ring, const std::string& text)
        : reg_(std::move(reg)), ring_(ring), text_(text)
    {
    }

    SuperPoly parse()
    {
        SuperPoly f = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("trailing input");
        return f;
    }

private:
    SuperPoly expr()
    {
        skip_ws();
        bool neg = consume('-');
        SuperPoly acc = term();
        if (neg)
            acc = -acc;
        while (true) {
            skip_ws();
            if (consume('+'))
                acc = acc + term();
            else if (consume('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    SuperPoly term()
    {
        SuperPoly acc = factor();
        while (true) {
            skip_ws();
            if (consume('*'))
                acc = acc * factor();
            else
                return acc;
        }
    }

    SuperPoly factor()
    {
        SuperPoly base = primary();
        skip_ws();
        if (consume('^')) {
            unsigned long e = integer();
            SuperPoly acc = SuperPoly::one(reg_, ring_);
            for (unsigned long k = 0; k < e; ++k)
                acc = acc * base;
            return acc;
        }
        return base;
    }

    SuperPoly primary()
    {
        skip_ws();
        if (consume('(')) {
            SuperPoly inner = expr();
            skip_ws();
            if (!consume(')'))
                fail("expected ')'");
            return inner;
        }
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            unsigned long num = integer();
            mpq_class q(static_cast<unsigned long>(num));
            skip_ws();
            if (consume('/')) {
                unsigned long den = integer();
                if (den == 0)
                    fail("zero denominator");
                q /= mpq_class(static_cast<unsigned long>(den));
            }
            return SuperPoly::constant(reg_, ring_, Scalar::from_rational(ring_, q));
        }
        std::string name = identifier();
        if (name.empty())
            fail("expected number, variable, or '('");
        if (auto v = reg_->find(name))
            return SuperPoly::variable(reg_, ring_, *v);
        if (name[0] == 'e' && name.size() > 1) {
            unsigned idx = 0;
            bool ok = true;
            for (std::size_t i = 1; i < name.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(name[i]))) {
                    ok = false;
                    break;
                }
                idx = idx * 10 + static_cast<unsigned>(name[i] - '0');
            }
            if (ok && idx >= 1 && idx <= ring_.generators)
                return SuperPoly::constant(reg_, ring_, Scalar::generator(ring_, idx));
        }
        fail("unknown variable '" + name + "'");
        return SuperPoly::zero(reg_, ring_); // unreachable
    }

    std::string identifier()
    {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    unsigned long integer()
    {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected integer");
        unsigned long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            v = v * 10 + static_cast<unsigned long>(text_[pos_++] - '0');
        return v;
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool consume(char c)
    {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& why)
    {
        throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + ": " +
                                    why + " in \"" + text_ + "\"");
    }

    SuperPoly::Registry reg_;
    RingSpec ring_;
    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace

SuperPoly parse_poly(SuperPoly::Registry reg, const RingSpec& ring, const std::string& text)
{
    return Parser(std::move(reg), ring, text).parse();
}

Scalar parse_scalar(const RingSpec& ring, const std::string& text)
{
    static const auto empty = std::make_shared<VarRegistry>();
    SuperPoly f = parse_poly(empty, ring, text);
    Scalar out = Scalar::zero(ring);
    for (const auto& [m, c] : f.terms()) {
        if (!m.is_unit())
            throw std::invalid_argument("expected a ring element, got a polynomial: " + text);
        out = out + c;
    }
    return out;
}

} // namespace skoszul
