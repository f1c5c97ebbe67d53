#ifndef ENTORUS_RECORDER_HPP
#define ENTORUS_RECORDER_HPP

#include "entorus/integer.hpp"

namespace entorus {

// Field-operation counters.  One recorder per thread of work; operations
// take an optional recorder and never touch global state.  Work performed
// inside a Frobenius application is accounted to the frobenius_* buckets so
// the shift-vs-exponentiation cost split stays visible.
struct OpRecorder {
    u64 fq_mults = 0;
    u64 fqn_mults = 0;
    u64 frobenius_apps = 0;
    u64 frobenius_fq_mults = 0;
    u64 frobenius_fqn_mults = 0;
    u64 inversions = 0;

    void add_fq(u64 k) {
        if (in_frobenius) frobenius_fq_mults += k;
        else fq_mults += k;
    }
    void add_fqn() {
        if (in_frobenius) frobenius_fqn_mults += 1;
        else fqn_mults += 1;
    }

    bool in_frobenius = false;
};

class FrobeniusScope {
  public:
    explicit FrobeniusScope(OpRecorder* rec) : rec_(rec) {
        if (rec_) {
            prev_ = rec_->in_frobenius;
            rec_->in_frobenius = true;
        }
    }
    ~FrobeniusScope() {
        if (rec_) rec_->in_frobenius = prev_;
    }
    FrobeniusScope(const FrobeniusScope&) = delete;
    FrobeniusScope& operator=(const FrobeniusScope&) = delete;

  private:
    OpRecorder* rec_;
    bool prev_ = false;
};

}  // namespace entorus

#endif
