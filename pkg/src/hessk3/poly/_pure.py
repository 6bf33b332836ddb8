"""Pure-Python sparse product on packed monomial keys.

Keys are non-negative integers encoding exponent vectors in fixed-width bit
fields, so adding two keys multiplies the monomials.  Terms come back in
order of first appearance with zero coefficients dropped; the compiled
kernel follows the same order.
"""


def mul_packed(ka, ca, kb, cb):
    acc = {}
    get = acc.get
    for k1, c1 in zip(ka, ca):
        for k2, c2 in zip(kb, cb):
            k = k1 + k2
            acc[k] = get(k, 0) + c1 * c2
    keys = [k for k, v in acc.items() if v]
    return keys, [acc[k] for k in keys]


mul_packed_int = mul_packed
