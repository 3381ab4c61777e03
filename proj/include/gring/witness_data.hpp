#pragma once

// Embedded copy of data/paper_witnesses.json so the verifier binary stays
// hermetic. A unit test asserts the two stay byte-identical.

namespace gring::fixtures {

inline const char* paper_witnesses_json() {
    return R"json({
 "schema": "paper-witnesses-v1",
 "fixtures": [
  {
   "claim": "2.1(4):q1",
   "group": "psl27",
   "provenance": "paper-s5.1",
   "equation": "(1-e2G) * eC7_1 * q1 = eC7_1 * eD4_eta",
   "eq_id": "L21_q1",
   "witness": [
    [
     "(1,6,8,3)(2,5,7,4)",
     {
      "k": 7,
      "coeffs": [
       "-1/8",
       "-1/8",
       "-1/8",
       "-1/8",
       "-1/8",
       "-1/8"
      ]
     }
    ],
    [
     "(1,3)(2,4)(5,6)(7,8)",
     {
      "k": 1,
      "coeffs": [
       "1/8"
      ]
     }
    ],
    [
     "(1,4,6,3)(2,8,5,7)",
     {
      "k": 7,
      "coeffs": [
       "0",
       "0",
       "0",
       "0",
       "0",
       "-1/8"
      ]
     }
    ],
    [
     "(1,7,4,8,5,3,2)",
     {
      "k": 7,
      "coeffs": [
       "0",
       "0",
       "1/8",
       "0",
       "0",
       "0"
      ]
     }
    ],
    [
     "(1,8,3,6,5,2,4)",
     {
      "k": 7,
      "coeffs": [
       "0",
       "0",
       "0",
       "0",
       "0",
       "1/8"
      ]
     }
    ],
    [
     "(2,7,3,8,6,5,4)",
     {
      "k": 7,
      "coeffs": [
       "0",
       "0",
       "-1/8",
       "0",
       "0",
       "0"
      ]
     }
    ],
    [
     "(1,4)(2,3)(5,8)(6,7)",
     {
      "k": 1,
      "coeffs": [
       "-1/8"
      ]
     }
    ],
    [
     "(1,5,4)(2,6,3)",
     {
      "k": 7,
      "coeffs": [
       "1/8",
       "1/8",
       "1/8",
       "1/8",
       "1/8",
       "1/8"
      ]
     }
    ]
   ],
   "expected_denominator_primes": [
    "2"
   ]
  },
  {
   "claim": "2.1(5):q4",
   "group": "psl27",
   "provenance": "paper-s5.1",
   "equation": "eC7_1 * eD4_eta = q4 * eD4_eta",
   "eq_id": "L21_q4",
   "witness": [
    [
     "id",
     {
      "k": 1,
      "coeffs": [
       "1/7"
      ]
     }
    ],
    [
     "(1,8,2)(4,5,6)",
     {
      "k": 7,
      "coeffs": [
       "0",
       "0",
       "0",
       "1/7",
       "0",
       "0"
      ]
     }
    ],
    [
     "(1,5,3,7,6,8,2)",
     {
      "k": 7,
      "coeffs": [
       "0",
       "0",
       "0",
       "0",
       "-1/7",
       "0"
      ]
     }
    ],
    [
     "(3,6,7)(4,5,8)",
     {
      "k": 7,
      "coeffs": [
       "-1/7",
       "-1/7",
       "-1/7",
       "-1/7",
       "-1/7",
       "-1/7"
      ]
     }
    ],
    [
     "(1,2,8,4)(3,7,5,6)",
     {
      "k": 7,
      "coeffs": [
       "0",
       "0",
       "1/7",
       "0",
       "0",
       "0"
      ]
     }
    ],
    [
     "(1,3,7,8,6,4,5)",
     {
      "k": 7,
      "coeffs": [
       "0",
       "0",
       "0",
       "0",
       "0",
       "-1/7"
      ]
     }
    ],
    [
     "(1,3)(2,6)(4,7)(5,8)",
     {
      "k": 7,
      "coeffs": [
       "0",
       "-1/7",
       "0",
       "0",
       "0",
       "0"
      ]
     }
    ]
   ],
   "expected_denominator_primes": [
    "7"
   ]
  },
  {
   "claim": "2.2(3):r1",
   "group": "psl27",
   "provenance": "paper-s5.2",
   "equation": "eA4_1 * r1 = r1; r1 * eA4_i = 0 (i != 1)",
   "eq_id": "L22_r1",
   "witness": [
    [
     "(1,3,4)(5,6,8)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,8,5,2)(3,4,6,7)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,5,4,2)(3,6,7,8)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,7,5)(3,6,8)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,8,7,5,2,6,3)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,5,2,3)(4,8,6,7)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,7)(2,3)(4,5)(6,8)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,3)(2,8)(4,5)(6,7)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,5,4,6,8,7,3)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,7,3,2,4,6,5)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,3,2,5)(4,7,6,8)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,8)(2,7)(3,6)(4,5)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,5,6,8)(2,7,4,3)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,7)(2,8)(3,4)(5,6)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,3,4,8)(2,7,6,5)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,8,6,5)(2,3,4,7)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,5)(2,8)(3,6)(4,7)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,7)(2,5)(3,6)(4,8)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,3)(2,4)(5,6)(7,8)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,8,4,3)(2,5,6,7)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,3,2)(5,6,7)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,8,3,6,5,2,4)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,5,4)(2,6,3)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,7,8,5)(2,6,3,4)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ]
   ],
   "expected_denominator_primes": []
  },
  {
   "claim": "2.2(3):rr1",
   "group": "psl27",
   "provenance": "paper-s5.2",
   "equation": "rr1 * (r1 * e4G * eA4_1) = e4G * eA4_1",
   "eq_id": "L22_rr1",
   "witness": [
    [
     "(1,3,6)(2,8,4)",
     {
      "k": 1,
      "coeffs": [
       "1/14"
      ]
     }
    ],
    [
     "(2,7,3,8,6,5,4)",
     {
      "k": 1,
      "coeffs": [
       "1/14"
      ]
     }
    ],
    [
     "(1,8,4)(2,7,3)",
     {
      "k": 1,
      "coeffs": [
       "1/14"
      ]
     }
    ],
    [
     "(1,4)(2,3)(5,8)(6,7)",
     {
      "k": 1,
      "coeffs": [
       "1/14"
      ]
     }
    ],
    [
     "(1,5,4)(2,6,3)",
     {
      "k": 1,
      "coeffs": [
       "1/14"
      ]
     }
    ],
    [
     "(1,3,5)(2,7,4)",
     {
      "k": 1,
      "coeffs": [
       "1/14"
      ]
     }
    ]
   ],
   "expected_denominator_primes": [
    "2",
    "7"
   ]
  },
  {
   "claim": "2.2(3):r2",
   "group": "psl27",
   "provenance": "paper-s5.2",
   "equation": "eA4_2 * r2 = r2; r2 * eA4_i = 0 (i != 2)",
   "eq_id": "L22_r2",
   "witness": [
    [
     "(1,7,6,5,3,8,4)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,5,2)(3,8,4)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,4,2)(5,8,7)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,6,5)(4,8,7)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,5,2,3)(4,8,6,7)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,4,2,7)(3,6,8,5)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,6)(2,7)(3,5)(4,8)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,7,2,4)(3,5,8,6)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,5,8,7)(2,4,3,6)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,4,3)(5,8,6)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,6,4,3,2,8,5)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,5)(2,6)(3,7)(4,8)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,4,3,5)(2,6,8,7)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,6)(2,5)(3,4)(7,8)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,7)(2,5)(3,6)(4,8)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,5,3,4)(2,7,8,6)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,7,5,3)(2,8,6,4)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,7,4,8,5,3,2)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,4)(2,5)(3,7)(6,8)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,5,2,8,7,6,4)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,6)(2,4)(3,7)(5,8)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,4)(2,3)(5,8)(6,7)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,6,7,5)(2,3,8,4)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,7,8,5)(2,6,3,4)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ]
   ],
   "expected_denominator_primes": []
  },
  {
   "claim": "2.2(3):rr2",
   "group": "psl27",
   "provenance": "paper-s5.2",
   "equation": "rr2 * (r2 * e4G * eA4_2) = e4G * eA4_2",
   "eq_id": "L22_rr2",
   "witness": [
    [
     "(1,7,8,5)(2,6,3,4)",
     {
      "k": 1,
      "coeffs": [
       "-1/14"
      ]
     }
    ]
   ],
   "expected_denominator_primes": [
    "2",
    "7"
   ]
  },
  {
   "claim": "2.2(3):r3",
   "group": "psl27",
   "provenance": "paper-s5.2",
   "equation": "eA4_3 * r3 = r3; r3 * eA4_i = 0 (i != 3)",
   "eq_id": "L22_r3",
   "witness": [
    [
     "(1,5,3,7,6,8,2)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,5,4,2)(3,6,7,8)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,6,2,7,5,4,3)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,2,4,5)(3,8,7,6)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,2)(3,4)(5,7)(6,8)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,5,7,6)(2,4,8,3)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,2,4)(5,7,8)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,6)(2,7)(3,5)(4,8)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,2)(3,5)(4,6)(7,8)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,6,8,5,4,7,2)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,8)(2,4)(3,5)(6,7)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,8)(2,7)(3,6)(4,5)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,6,5,4)(2,3,7,8)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,8)(2,3)(4,6)(5,7)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,2,3)(5,7,6)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,8,5)(2,7,6)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,8,6,5)(2,3,4,7)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,5)(2,7)(3,8)(4,6)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,8,2,4,3,7,5)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,2,3,6)(4,8,7,5)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,5,3,4)(2,7,8,6)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,5,3)(2,4,7)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,6,3,2)(4,5,7,8)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,6,7,5)(2,3,8,4)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ]
   ],
   "expected_denominator_primes": []
  },
  {
   "claim": "2.2(3):rr3",
   "group": "psl27",
   "provenance": "paper-s5.2",
   "equation": "rr3 * (r3 * e4G * eA4_3) = e4G * eA4_3",
   "eq_id": "L22_rr3",
   "witness": [
    [
     "(1,6,7,5)(2,3,8,4)",
     {
      "k": 1,
      "coeffs": [
       "-1/14"
      ]
     }
    ]
   ],
   "expected_denominator_primes": [
    "2",
    "7"
   ]
  },
  {
   "claim": "2.2(3):r4",
   "group": "psl27",
   "provenance": "paper-s5.2",
   "equation": "eA4_4 * r4 = r4; r4 * eA4_i = 0 (i != 4)",
   "eq_id": "L22_r4",
   "witness": [
    [
     "(1,2,8,6,7,3,5)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,2,4,5)(3,8,7,6)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,2)(3,4)(5,7)(6,8)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,6,2)(3,8,7)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,7,6,2)(3,4,5,8)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,3,5,4,8,6,2)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,2)(3,5)(4,6)(7,8)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,6,7,2,8,3,4)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,7,2,4)(3,5,8,6)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,3,8,7,2,5,4)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,6,3)(2,4,8)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,7,3)(2,5,8)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,3)(2,8)(4,5)(6,7)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,2)(3,8)(4,7)(5,6)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,6,4,7)(2,5,3,8)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,7)(2,8)(3,4)(5,6)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,3,5,7)(2,4,6,8)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,6)(2,5)(3,4)(7,8)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,7,4,6)(2,8,3,5)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,3,8,6)(2,4,7,5)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,6,8,3)(2,5,7,4)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,7,5,3)(2,8,6,4)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,3)(2,4)(5,6)(7,8)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,2,5)(3,4,8)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ]
   ],
   "expected_denominator_primes": []
  },
  {
   "claim": "2.2(3):rr4",
   "group": "psl27",
   "provenance": "paper-s5.2",
   "equation": "rr4 * (r4 * e4G * eA4_4) = e4G * eA4_4",
   "eq_id": "L22_rr4",
   "witness": [
    [
     "(1,5,4)(2,6,3)",
     {
      "k": 1,
      "coeffs": [
       "-1/14"
      ]
     }
    ]
   ],
   "expected_denominator_primes": [
    "2",
    "7"
   ]
  },
  {
   "claim": "2.2(3):r5",
   "group": "psl27",
   "provenance": "paper-s5.2",
   "equation": "eA4_5 * r5 = r5; r5 * eA4_i = 0 (i != 5)",
   "eq_id": "L22_r5",
   "witness": [
    [
     "(1,2,8)(4,6,5)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,8,2,6)(3,5,4,7)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,5,8,2,3,4,6)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,3)(2,6)(4,7)(5,8)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,6,2,8)(3,7,4,5)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,7,5,6,2,4,8)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(2,4,6)(3,8,5)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,4,5,6)(2,8,7,3)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,7,2,3,8,5,6)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(2,8,7)(3,6,5)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,5,8,7)(2,4,3,6)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(2,6,7,5,3,4,8)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,8)(2,4)(3,5)(6,7)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,3)(2,8)(4,5)(6,7)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,5,8)(2,6,7)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,6,5,4)(2,3,7,8)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,4,7,8)(2,6,5,3)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,7)(2,8)(3,4)(5,6)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,8,7,4)(2,3,5,6)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,2,3,6)(4,8,7,5)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,3)(2,4)(5,6)(7,8)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,2,6,7)(3,8,5,4)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,6)(2,4)(3,7)(5,8)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,4)(2,3)(5,8)(6,7)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ]
   ],
   "expected_denominator_primes": []
  },
  {
   "claim": "2.2(3):rr5",
   "group": "psl27",
   "provenance": "paper-s5.2",
   "equation": "rr5 * (r5 * e4G * eA4_5) = e4G * eA4_5",
   "eq_id": "L22_rr5",
   "witness": [
    [
     "(1,4)(2,3)(5,8)(6,7)",
     {
      "k": 1,
      "coeffs": [
       "-1/14"
      ]
     }
    ]
   ],
   "expected_denominator_primes": [
    "2",
    "7"
   ]
  },
  {
   "claim": "2.2(3):r6",
   "group": "psl27",
   "provenance": "paper-s5.2",
   "equation": "eA4_6 * r6 = r6; r6 * eA4_i = 0 (i != 6)",
   "eq_id": "L22_r6",
   "witness": [
    [
     "id",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,6,3,4,7,5,8)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(3,7,6)(4,8,5)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,6,5)(4,8,7)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,6,5,8,3,2,7)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,5,6)(4,7,8)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,5,7,6)(2,4,8,3)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,6)(2,7)(3,5)(4,8)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(2,8,7)(3,6,5)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,5,7)(3,8,6)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,5,7,3,4,2,8)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,6,3)(2,4,8)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(2,8,3)(4,7,5)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(2,7,8)(3,5,6)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,3,4,8)(2,7,6,5)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,3,8,6)(2,4,7,5)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,5)(2,8)(3,6)(4,7)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,3,7)(2,8,5)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,3)(2,4)(5,6)(7,8)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,5,3)(2,4,7)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,6)(2,4)(3,7)(5,8)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,3,6)(2,8,4)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(2,7,3,8,6,5,4)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,3,5)(2,7,4)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ]
   ],
   "expected_denominator_primes": []
  },
  {
   "claim": "2.2(3):rr6",
   "group": "psl27",
   "provenance": "paper-s5.2",
   "equation": "rr6 * (r6 * e4G * eA4_6) = e4G * eA4_6",
   "eq_id": "L22_rr6",
   "witness": [
    [
     "(1,3,5)(2,7,4)",
     {
      "k": 1,
      "coeffs": [
       "1/14"
      ]
     }
    ]
   ],
   "expected_denominator_primes": [
    "2",
    "7"
   ]
  },
  {
   "claim": "2.2(6):q3",
   "group": "psl27",
   "provenance": "paper-s5.2",
   "equation": "q3 * (eA4_1 * eH_triv) = eH_triv",
   "eq_id": "L22_q3",
   "witness": [
    [
     "(1,6)(2,4)(3,7)(5,8)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,3,6)(2,8,4)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(2,7,3,8,6,5,4)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,8,4)(2,7,3)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,4)(2,3)(5,8)(6,7)",
     {
      "k": 1,
      "coeffs": [
       "-1"
      ]
     }
    ],
    [
     "(1,5,4)(2,6,3)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ],
    [
     "(1,3,5)(2,7,4)",
     {
      "k": 1,
      "coeffs": [
       "1"
      ]
     }
    ]
   ],
   "expected_denominator_primes": []
  },
  {
   "claim": "2.2(6):q4",
   "group": "psl27",
   "provenance": "paper-s5.2",
   "equation": "eA4_1 * eH_triv = q4 * eH_triv",
   "eq_id": "L22_q4",
   "witness": [
    [
     "(1,5,3,4)(2,7,8,6)",
     {
      "k": 1,
      "coeffs": [
       "1/4"
      ]
     }
    ],
    [
     "(1,3,6)(2,8,4)",
     {
      "k": 1,
      "coeffs": [
       "1/4"
      ]
     }
    ],
    [
     "(1,2,7,3)(4,8,5,6)",
     {
      "k": 1,
      "coeffs": [
       "1/4"
      ]
     }
    ],
    [
     "(1,3,5)(2,7,4)",
     {
      "k": 1,
      "coeffs": [
       "1/4"
      ]
     }
    ]
   ],
   "expected_denominator_primes": [
    "2"
   ]
  }
 ]
})json";
}

}  // namespace gring::fixtures
