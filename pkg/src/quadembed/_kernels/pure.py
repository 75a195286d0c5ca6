"""Pure-Python reference implementations of the letter-array kernels.

These are the fallback used when the compiled extension is missing and
the oracle the extension is tested against.  `common_runs` here is a
direct per-diagonal scan with no skipping, deliberately simpler than
the probe-based compiled version.
"""

import numpy as np

NAME = "pure"


def reduce_codes(codes):
    """Freely reduce a signed-code array; returns a new int32 array."""
    stack = []
    for c in codes.tolist():
        if stack and stack[-1] == -c:
            stack.pop()
        else:
            stack.append(c)
    return np.array(stack, dtype=np.int32)


def common_runs(u, v, min_len):
    """All maximal common-subword triples (pos_u, pos_v, length) of
    length >= min_len, as an (k, 3) int64 array."""
    nu, nv = len(u), len(v)
    out = []
    uu = u.tolist()
    vv = v.tolist()
    for t in range(-(nv - 1), nu):
        i0 = t if t > 0 else 0
        j0 = -t if t < 0 else 0
        span = min(nu - i0, nv - j0)
        if span < min_len:
            continue
        run = 0
        for k in range(span):
            if uu[i0 + k] == vv[j0 + k]:
                run += 1
            else:
                if run >= min_len:
                    out.append((i0 + k - run, j0 + k - run, run))
                run = 0
        if run >= min_len:
            out.append((i0 + span - run, j0 + span - run, run))
    return np.array(out, dtype=np.int64).reshape(-1, 3)
