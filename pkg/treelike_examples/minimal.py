import treelike
from treelike.bijections.permutations import count_2_31
from treelike.tableaux.statistics import stats


def run():
    tableau = treelike.history_decode((0, 1, 0, 3, 1))
    sigma = treelike.phi1(tableau)
    print(f"Tableau with insertion history (0, 1, 0, 3, 1):\n{treelike.render(tableau)}")
    print(f"Statistics: {stats(tableau).to_dict()}")
    print(f"Its permutation under phi1 is {sigma}, which has {count_2_31(sigma)} "
          f"occurrences of 2-31.")


if __name__ == "__main__":
    run()
