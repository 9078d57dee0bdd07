#ifndef TILING_FERN_HPP
#define TILING_FERN_HPP

#include <initializer_list>
#include <string>
#include <vector>

namespace tiling {

/// Side lengths of the triangles of a fern, indexed from 1 in all accessors.
class FernSequence {
public:
    FernSequence() = default;
    FernSequence(std::initializer_list<long> entries);
    explicit FernSequence(std::vector<long> entries);

    const std::vector<long>& entries() const { return entries_; }
    long size() const { return static_cast<long>(entries_.size()); }
    bool empty() const { return entries_.empty(); }

    /// 1-based entry; zero beyond the length (and for k < 1)
    long at(long k) const;

    bool operator==(const FernSequence&) const = default;
    auto operator<=>(const FernSequence&) const = default;

private:
    std::vector<long> entries_;
};

struct FernSums {
    long total = 0;
    long even_sum = 0;
    long odd_sum = 0;
    long positive_count = 0;
    bool operator==(const FernSums&) const = default;
};

FernSums fern_sums(const FernSequence& f);

/// t_1 + ... + t_k, entries past the end counting as zero
long partial_sum(const FernSequence& f, long k);

/// add 1 to the last entry when the length is even, otherwise append a 1
FernSequence plus_one(const FernSequence& f);

/// "2,3,1", "(2,3,1)", "" and "()" are accepted
FernSequence parse_fern(const std::string& text);

/// "(2,3,1)"
std::string format_fern(const FernSequence& f);

/// list of ferns such as "(),(1),(2,1)"
std::vector<FernSequence> parse_fern_list(const std::string& text);

} // namespace tiling

#endif
