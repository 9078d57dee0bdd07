#include "tiling/fern.hpp"

#include <cctype>

#include "tiling/errors.hpp"

namespace tiling {

FernSequence::FernSequence(std::initializer_list<long> entries)
    : FernSequence(std::vector<long>(entries))
{
}

FernSequence::FernSequence(std::vector<long> entries) : entries_(std::move(entries))
{
    for (long e : entries_)
        if (e < 0)
            throw ParameterError("fern entries must be nonnegative");
}

long FernSequence::at(long k) const
{
    if (k < 1 || k > size())
        return 0;
    return entries_[static_cast<std::size_t>(k - 1)];
}

FernSums fern_sums(const FernSequence& f)
{
    FernSums s;
    for (long k = 1; k <= f.size(); ++k) {
        long v = f.at(k);
        s.total += v;
        (k % 2 == 0 ? s.even_sum : s.odd_sum) += v;
        if (v > 0)
            ++s.positive_count;
    }
    return s;
}

long partial_sum(const FernSequence& f, long k)
{
    long s = 0;
    for (long i = 1; i <= k && i <= f.size(); ++i)
        s += f.at(i);
    return s;
}

FernSequence plus_one(const FernSequence& f)
{
    std::vector<long> v = f.entries();
    if (v.size() % 2 == 1 || v.empty())
        v.push_back(1);
    else
        v.back() += 1;
    return FernSequence(std::move(v));
}

FernSequence parse_fern(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')')
            s += c;
    std::vector<long> v;
    if (s.empty())
        return FernSequence();
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = s.find(',', pos);
        std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (item.empty())
            throw UsageError("empty fern entry in '" + text + "'");
        for (char c : item)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw UsageError("bad fern entry '" + item + "'");
        v.push_back(std::stol(item));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return FernSequence(std::move(v));
}

std::string format_fern(const FernSequence& f)
{
    std::string s = "(";
    for (long k = 1; k <= f.size(); ++k) {
        if (k > 1)
            s += ",";
        s += std::to_string(f.at(k));
    }
    return s + ")";
}

std::vector<FernSequence> parse_fern_list(const std::string& text)
{
    std::vector<FernSequence> out;
    std::size_t pos = 0;
    while (true) {
        pos = text.find('(', pos);
        if (pos == std::string::npos)
            break;
        std::size_t close = text.find(')', pos);
        if (close == std::string::npos)
            throw UsageError("unbalanced parentheses in '" + text + "'");
        out.push_back(parse_fern(text.substr(pos + 1, close - pos - 1)));
        pos = close + 1;
    }
    if (out.empty())
        throw UsageError("no ferns in '" + text + "'");
    return out;
}

} // namespace tiling
