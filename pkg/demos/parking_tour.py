"""Park a preference list car by car and read off its forest."""
import argparse

from plattice import PartialParkingFunction, park, parking_statistics, priority_forest_of_pf
from plattice.parking import prefix_birds_eye_words


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("prefs", type=int, nargs="*", default=[2, 4, 2, 1, 3])
    ap.add_argument("--spots", type=int)
    args = ap.parse_args()

    pf = PartialParkingFunction(args.spots or len(args.prefs), tuple(args.prefs))
    for k, w in enumerate(prefix_birds_eye_words(pf)):
        print(f"after {k} cars: {w}")

    out = park(pf)
    for car, want, spot in out.blueprint:
        print(f"car {car} wants {want}, parks at {spot}")
    if not out.success:
        print("some car drove off the end")
        return
    st = parking_statistics(pf)
    print(f"lucky {st.lucky}, probes {st.probes}, records {sorted(st.records)}")
    print("forest parents", list(priority_forest_of_pf(pf).parent))


if __name__ == "__main__":
    main()
