#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace relmod {

struct Symbol {
    std::string name;
    int arity = 0;
};

// Ordered list of relation symbols. The position of a symbol is its index,
// which fixes the bit order used for monadic element types.
class Vocabulary {
public:
    Vocabulary() = default;

    explicit Vocabulary(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            const Symbol& s = symbols_[i];
            if (s.name.empty())
                throw std::invalid_argument("vocabulary: empty symbol name");
            if (s.arity < 1)
                throw std::invalid_argument("vocabulary: arity of " + s.name + " must be >= 1");
            for (std::size_t j = 0; j < i; ++j)
                if (symbols_[j].name == s.name)
                    throw std::invalid_argument("vocabulary: duplicate symbol " + s.name);
        }
    }

    std::size_t size() const { return symbols_.size(); }
    const Symbol& symbol(std::size_t i) const { return symbols_.at(i); }
    const std::vector<Symbol>& symbols() const { return symbols_; }

    std::optional<std::size_t> index_of(const std::string& name) const {
        for (std::size_t i = 0; i < symbols_.size(); ++i)
            if (symbols_[i].name == name) return i;
        return std::nullopt;
    }

    bool all_unary() const {
        for (const Symbol& s : symbols_)
            if (s.arity != 1) return false;
        return true;
    }

    // Single binary symbol, i.e. a (di)graph vocabulary.
    bool single_binary() const { return symbols_.size() == 1 && symbols_[0].arity == 2; }

    bool operator==(const Vocabulary& o) const {
        if (symbols_.size() != o.symbols_.size()) return false;
        for (std::size_t i = 0; i < symbols_.size(); ++i)
            if (symbols_[i].name != o.symbols_[i].name || symbols_[i].arity != o.symbols_[i].arity)
                return false;
        return true;
    }
    bool operator!=(const Vocabulary& o) const { return !(*this == o); }

    static Vocabulary graph() { return Vocabulary({{"E", 2}}); }

private:
    std::vector<Symbol> symbols_;
};

}  // namespace relmod
