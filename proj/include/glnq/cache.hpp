// cache.hpp -- canonical on-disk serialization of character tables.
//
// One text file per (n, q). The layout is fixed and thread-count
// independent: header (format version, n, q, exponent, |G|), the class list
// (label, size, centralizer order), then one value line per class per
// character, each cyclotomic written as (order, reduced rationals as
// "numerator/denominator"). A loaded table is trusted only after the class
// list matches the freshly computed one and the full orthogonality
// validation passes; anything else raises CacheError and callers rebuild.

#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "glnq/chartable.hpp"
#include "glnq/dixon.hpp"

namespace glnq {

inline std::string serialize_table(const CharacterTable& table) {
    const GroupContext& G = table.group();
    std::ostringstream out;
    out << "glnq-table 1\n";
    out << "n " << G.spec().n << "\n";
    out << "q " << G.spec().q << "\n";
    out << "exponent " << table.exponent() << "\n";
    out << "order " << G.order().to_string() << "\n";
    out << "classes " << G.classes().size() << "\n";
    for (const ClassData& c : G.classes())
        out << "class " << c.label.to_string() << " " << c.size.to_string() << " "
            << c.centralizer_order.to_string() << "\n";
    out << "characters " << table.size() << "\n";
    for (const IrreducibleCharacter& chi : table.chars()) {
        out << "character " << chi.degree << "\n";
        for (const Cyclotomic& v : chi.values) {
            out << "value " << v.order();
            for (const Rational& r : v.coeffs()) out << " " << r.to_string();
            out << "\n";
        }
    }
    return out.str();
}

inline CharacterTable parse_table(const std::string& text) {
    std::istringstream in(text);
    std::string word;
    auto expect = [&](const std::string& key) {
        if (!(in >> word) || word != key)
            throw CacheError("cache: expected '" + key + "', got '" + word + "'");
    };
    try {
        expect("glnq-table");
        int version;
        if (!(in >> version) || version != 1) throw CacheError("cache: unsupported format version");
        expect("n");
        int n;
        in >> n;
        expect("q");
        long long q;
        in >> q;
        expect("exponent");
        long long exponent;
        in >> exponent;
        expect("order");
        std::string order_str;
        in >> order_str;
        expect("classes");
        std::size_t class_count;
        in >> class_count;

        auto ctx = std::make_shared<GroupContext>(GroupSpec{n, q});
        if (BigInt::from_string(order_str) != ctx->order())
            throw CacheError("cache: stored group order is wrong");
        if (class_count != ctx->classes().size())
            throw CacheError("cache: stored class count is wrong");
        for (std::size_t i = 0; i < class_count; ++i) {
            expect("class");
            std::string label_str, size_str, cent_str;
            in >> label_str >> size_str >> cent_str;
            const ClassData& c = ctx->classes()[i];
            if (label_str != c.label.to_string() ||
                BigInt::from_string(size_str) != c.size ||
                BigInt::from_string(cent_str) != c.centralizer_order)
                throw CacheError("cache: class list disagrees with analytic enumeration");
        }

        expect("characters");
        std::size_t char_count;
        in >> char_count;
        if (char_count != class_count) throw CacheError("cache: character count is wrong");
        std::vector<IrreducibleCharacter> chars;
        chars.reserve(char_count);
        for (std::size_t i = 0; i < char_count; ++i) {
            expect("character");
            IrreducibleCharacter chi;
            in >> chi.degree;
            for (std::size_t c = 0; c < class_count; ++c) {
                expect("value");
                long long order;
                in >> order;
                if (order < 1 || exponent % order != 0)
                    throw CacheError("cache: value order does not divide the exponent");
                std::size_t phi = static_cast<std::size_t>(euler_phi(order));
                std::vector<Rational> coeffs(phi);
                for (std::size_t t = 0; t < phi; ++t) {
                    std::string r;
                    if (!(in >> r)) throw CacheError("cache: truncated value line");
                    coeffs[t] = Rational::from_string(r);
                }
                chi.values.push_back(Cyclotomic::from_coeffs(order, coeffs));
                if (chi.values.back().coeffs() != coeffs)
                    throw CacheError("cache: value coefficients were not in canonical form");
            }
            chars.push_back(std::move(chi));
        }
        CharacterTable table(std::move(ctx), exponent, std::move(chars));
        validate_table(table); // orthogonality re-validation before any use
        return table;
    } catch (const CacheError&) {
        throw;
    } catch (const std::exception& e) {
        throw CacheError(std::string("cache: ") + e.what());
    }
}

inline std::string table_cache_filename(const GroupSpec& spec) {
    return "glnq-table-n" + std::to_string(spec.n) + "-q" + std::to_string(spec.q) + ".txt";
}

// Memory-first table store with optional disk persistence. Corrupt or stale
// files are rebuilt, never used.
class TableCache {
public:
    explicit TableCache(Budget budget, std::string dir = "")
        : budget_(std::move(budget)), dir_(std::move(dir)) {}

    const Budget& budget() const { return budget_; }

    const CharacterTable& get(int n, long long q) {
        GroupSpec spec{n, q};
        auto it = tables_.find(spec);
        if (it != tables_.end()) return *it->second;

        if (!dir_.empty()) {
            std::filesystem::path path = std::filesystem::path(dir_) / table_cache_filename(spec);
            std::ifstream in(path);
            if (in) {
                std::stringstream buffer;
                buffer << in.rdbuf();
                try {
                    auto table = std::make_unique<CharacterTable>(parse_table(buffer.str()));
                    if (table->group().spec().n != n || table->group().spec().q != q)
                        throw CacheError("cache: file holds a different group");
                    return *tables_.emplace(spec, std::move(table)).first->second;
                } catch (const CacheError&) {
                    // fall through to a rebuild
                }
            }
        }

        auto ctx = std::make_shared<GroupContext>(spec);
        auto table = std::make_unique<CharacterTable>(build_character_table(ctx, budget_));
        if (!dir_.empty()) {
            std::filesystem::create_directories(dir_);
            std::filesystem::path path = std::filesystem::path(dir_) / table_cache_filename(spec);
            std::ofstream out(path, std::ios::trunc);
            out << serialize_table(*table);
        }
        return *tables_.emplace(spec, std::move(table)).first->second;
    }

    std::function<const CharacterTable&(int)> provider(long long q) {
        return [this, q](int rank) -> const CharacterTable& { return get(rank, q); };
    }

private:
    Budget budget_;
    std::string dir_;
    std::map<GroupSpec, std::unique_ptr<CharacterTable>> tables_;
};

} // namespace glnq
