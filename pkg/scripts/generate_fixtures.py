"""
고정 예제 행렬 생성 스크립트
실패 예제, 3x3 예제, 균형 순환/바퀴 라플라시안을 data/fixtures/에 저장
"""
from pathlib import Path

import numpy as np

from dqeig.algebra.quaternion import Quaternion
from dqeig.config import get_settings
from dqeig.graphgen.fixtures import fail_iii, fail_iv, fail_v, infinite_eigenvalue_example, non_necessity_example
from dqeig.graphgen.laplacian import cycle_laplacian, wheel_laplacian
from dqeig.io.files import save_matrix
from dqeig.models.schemas import MatrixMetadata


def main():
    """메인 함수"""
    settings = get_settings()
    seed = settings.default_seed
    out_dir = Path(settings.output_dir) / "fixtures"
    out_dir.mkdir(parents=True, exist_ok=True)

    print("실패 예제 저장 중...")
    for name, build in (("fail_iii", fail_iii), ("fail_iv", fail_iv), ("fail_v", fail_v)):
        a, v0 = build()
        save_matrix(out_dir / f"{name}.json", a, MatrixMetadata(family="fixture", params={"name": name}), v0)
        print(f"  {name}.json (n={a.n_rows})")

    print("3x3 예제 저장 중...")
    alpha = Quaternion(3.0)
    for name, build in (("non_necessity", non_necessity_example), ("infinite_eigenvalues", infinite_eigenvalue_example)):
        a, _, v = build(alpha)
        save_matrix(
            out_dir / f"{name}.json",
            a,
            MatrixMetadata(family="fixture", params={"name": name, "alpha": list(alpha.as_tuple())}),
            v,
        )
        print(f"  {name}.json")

    print("균형 라플라시안 저장 중...")
    for family, builder, sizes in (("cycle", cycle_laplacian, (3, 4)), ("wheel", wheel_laplacian, (4, 5))):
        for n in sizes:
            rng = np.random.default_rng(seed)
            _, a = builder(n, rng, balanced=True)
            path = out_dir / f"{family}{n}.json"
            save_matrix(path, a, MatrixMetadata(family=family, seed=seed, params={"n": n, "balanced": True}))
            print(f"  {path.name}")

    print(f"\n완료: {out_dir}")


if __name__ == "__main__":
    main()
