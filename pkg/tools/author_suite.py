"""Author and verify the hand-built 7-entity problem suite.

Each problem is checked end to end (parse, compose, solve) with the
exhaustive oracle, and exactly one choice must satisfy its mode; the
verified problems are then frozen to data/ordering_suite.jsonl.
"""

import json
import sys
from pathlib import Path

from fsli.discourse import Problem
from fsli.harness import solve

SUITE = [
    # 1. popularity, could-be-true (the worked seven-program ranking)
    {
        "premise": [
            "There are seven TV programs: H, J, L, P, Q, S, and V.",
            "J is less popular than H.", "L is less popular than H.",
            "J is more popular than Q.", "S is less popular than L.",
            "V is less popular than L.", "P is less popular than Q.",
            "S is less popular than Q.", "S is not seventh.",
        ],
        "question": "V is more popular than Q. J is less popular than L. What is true?",
        "choices": [
            "H is less popular than Q.",
            "J is more popular than V.",
            "S is the most popular.",
            "Q is more popular than L.",
            "P is more popular than J.",
        ],
        "label": 1,
    },
    # 2. performance chain, must-be-true
    {
        "premise": [
            "There are seven runners: Ana, Ben, Cal, Dee, Eli, Fay, and Gus.",
            "Ana finished above Ben.", "Ben finished above Cal.",
            "Cal finished above Dee.", "Dee finished above Eli.",
            "Eli finished above Fay.", "Gus finished below Fay.",
        ],
        "question": "What must be true?",
        "choices": [
            "Cal finished third.",
            "Gus finished above Ana.",
            "Ben finished below Dee.",
            "Fay finished first.",
            "Eli finished above Dee.",
        ],
        "label": 0,
    },
    # 3. speed chain, cannot-be-true
    {
        "premise": [
            "There are seven vehicles: a tram, a bus, a van, a jeep, a taxi, a truck, and a scooter.",
            "The tram is faster than the bus.", "The bus is faster than the van.",
            "The jeep is slower than the van.", "The taxi is slower than the jeep.",
            "The truck is the slowest.", "The scooter is faster than the tram.",
        ],
        "question": "What is not true?",
        "choices": [
            "The van is the fourth-fastest.",
            "The tram is the second-fastest.",
            "The truck is the slowest.",
            "The taxi is faster than the jeep.",
            "The scooter is the fastest.",
        ],
        "label": 3,
    },
    # 4. popularity, conditional question rewritten to could-be-true
    {
        "premise": [
            "There are seven TV programs: A, B, C, D, E, F, and G.",
            "A is more popular than B.", "C is less popular than B.",
            "D is less popular than C.", "E is less popular than D.",
            "F is less popular than E.",
        ],
        "question": "If G is less popular than F, then which one of the following could be true of the ranking?",
        "choices": [
            "F is the second least popular.",
            "G is more popular than E.",
            "B is the most popular.",
            "D is more popular than C.",
            "A is the least popular.",
        ],
        "label": 0,
    },
    # 5. expense chain over names, must-be-true
    {
        "premise": [
            "There are seven paintings: K, L, M, N, O, P, and Q.",
            "K is more expensive than L.", "L is more expensive than M.",
            "N is less expensive than M.", "O is less expensive than N.",
            "P is less expensive than O.", "Q is less expensive than P.",
        ],
        "question": "What must be true?",
        "choices": [
            "N is the fourth-most expensive.",
            "Q is more expensive than K.",
            "M is the most expensive.",
            "O is the second-cheapest.",
            "L is less expensive than N.",
        ],
        "label": 0,
    },
    # 6. schedule with an adjacency constraint, must-be-true
    {
        "premise": [
            "There are seven presentations: R, S, T, U, V, W, and X.",
            "R is earlier than S.", "S is immediately before T.",
            "T is earlier than U.", "V is later than U.",
            "W is later than V.", "X is later than W.",
        ],
        "question": "What must be true?",
        "choices": [
            "T is third.",
            "S is immediately after T.",
            "U is later than V.",
            "R is not the earliest.",
            "X is earlier than W.",
        ],
        "label": 0,
    },
    # 7. shelf direction with a redundant negation, cannot-be-true
    {
        "premise": [
            "There are seven books: B, C, D, E, F, G, and H.",
            "B is to the left of C.", "C is to the left of D.",
            "D is not seventh.", "E is to the right of D.",
            "F is to the right of E.", "G is to the right of F.",
            "H is to the right of G.",
        ],
        "question": "What is not true?",
        "choices": [
            "H is the rightmost.",
            "E is the fourth from the left.",
            "C is to the left of B.",
            "B is the leftmost.",
            "G is the second from the right.",
        ],
        "label": 2,
    },
    # 8. golf with interleavable branches, could-be-true
    {
        "premise": [
            "There are seven golfers: Ana, Eli, Eve, Mel, Dan, Mya, and Joe.",
            "Ana finished above Eli.", "Eli finished above Eve.",
            "Mel finished below Eve.", "Dan finished below Mel.",
            "Mya finished below Eve.", "Joe finished below Mya.",
        ],
        "question": "What is true?",
        "choices": [
            "Dan finished fourth.",
            "Joe finished last.",
            "Eve finished below Mel.",
            "Ana finished second.",
            "Eli finished above Ana.",
        ],
        "label": 1,
    },
    # 9. fruit expense with two branches, must-be-true
    {
        "premise": [
            "There are seven fruits: apples, pears, plums, kiwis, mangoes, peaches, and loquats.",
            "The apples are more expensive than the pears.",
            "The pears are more expensive than the plums.",
            "The kiwis are less expensive than the plums.",
            "The mangoes are less expensive than the kiwis.",
            "The peaches are less expensive than the plums.",
            "The loquats are less expensive than the peaches.",
        ],
        "question": "What must be true?",
        "choices": [
            "The plums are the third-most expensive.",
            "The kiwis are more expensive than the peaches.",
            "The mangoes are the cheapest.",
            "The pears are the most expensive.",
            "The loquats are more expensive than the kiwis.",
        ],
        "label": 0,
    },
    # 10. heights with a non-redundant negation, cannot-be-true
    {
        "premise": [
            "There are seven children: Ben, Cam, Dot, Eva, Fin, Gil, and Hal.",
            "Ben is taller than Cam.", "Cam is taller than Dot.",
            "Eva is shorter than Dot.", "Fin is shorter than Dot.",
            "Gil is shorter than Fin.", "Hal is not the tallest.",
        ],
        "question": "What is not true?",
        "choices": [
            "Hal is the tallest.",
            "Ben is the tallest.",
            "Eva is the shortest.",
            "Gil is shorter than Fin.",
            "Cam is the second-tallest.",
        ],
        "label": 0,
    },
]


def main() -> int:
    ok = True
    for i, row in enumerate(SUITE):
        problem = Problem(tuple(row["premise"]), row["question"], tuple(row["choices"]))
        try:
            answer = solve(problem, verify=True)
        except Exception as exc:  # noqa: BLE001 - authoring tool, report everything
            print(f"problem {i}: ERROR {exc}")
            ok = False
            continue
        true_idx = [j for j, v in enumerate(answer.per_choice) if v]
        status = "ok" if true_idx == [row["label"]] else "MISMATCH"
        if status != "ok":
            ok = False
        print(
            f"problem {i}: mode={answer.mode.value} per_choice={answer.per_choice} "
            f"intended={row['label']} -> {status}"
        )
    if not ok:
        return 1
    out = Path(__file__).resolve().parents[1] / "data" / "ordering_suite.jsonl"
    out.parent.mkdir(exist_ok=True)
    out.write_text("\n".join(json.dumps(r) for r in SUITE) + "\n", encoding="utf-8")
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
