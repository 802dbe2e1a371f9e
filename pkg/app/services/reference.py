"""
Published simulation results for the estimated d (T = 3000, 500 replications),
keyed by (design, d, k) -> (bias, rmse, se). Values are as printed, including
the d = 0.45, k = 4, m2 SE of 0.0023 that is inconsistent with its bias and RMSE.
"""

from typing import Dict, Optional, Tuple

from app.core.enums import Design

Triple = Tuple[float, float, float]

PUBLISHED: Dict[Tuple[Design, float, int], Triple] = {
    # No structural change, k = 0
    (Design.M1, 0.25, 0): (0.0539, 0.0932, 0.0761),
    (Design.M1, 0.35, 0): (0.0409, 0.0868, 0.0765),
    (Design.M1, 0.45, 0): (0.0363, 0.0760, 0.0667),
    # No structural change, flexible Fourier orders 1..4
    (Design.M1, 0.25, 1): (0.0816, 0.1184, 0.0858),
    (Design.M1, 0.35, 1): (0.0239, 0.0795, 0.0758),
    (Design.M1, 0.45, 1): (0.0082, 0.0793, 0.0789),
    (Design.M1, 0.25, 2): (0.0563, 0.0989, 0.0813),
    (Design.M1, 0.35, 2): (0.0090, 0.0811, 0.0806),
    (Design.M1, 0.45, 2): (0.0059, 0.0904, 0.0903),
    (Design.M1, 0.25, 3): (0.0302, 0.0877, 0.0823),
    (Design.M1, 0.35, 3): (0.0028, 0.0914, 0.0914),
    (Design.M1, 0.45, 3): (-0.0276, 0.1029, 0.0992),
    (Design.M1, 0.25, 4): (0.0390, 0.0787, 0.0684),
    (Design.M1, 0.35, 4): (-0.0132, 0.0769, 0.0758),
    (Design.M1, 0.45, 4): (-0.0411, 0.1026, 0.0940),
    # One break (m2) and two breaks (m3)
    (Design.M2, 0.25, 0): (0.0886, 0.0959, 0.0366),
    (Design.M2, 0.35, 0): (0.0105, 0.0336, 0.0319),
    (Design.M2, 0.45, 0): (-0.058, 0.0684, 0.0362),
    (Design.M3, 0.25, 0): (0.2353, 0.2466, 0.0737),
    (Design.M3, 0.35, 0): (0.1474, 0.1590, 0.0596),
    (Design.M3, 0.45, 0): (0.1127, 0.1291, 0.0630),
    (Design.M2, 0.25, 1): (0.1134, 0.1203, 0.0402),
    (Design.M2, 0.35, 1): (0.0320, 0.0487, 0.0367),
    (Design.M2, 0.45, 1): (0.0329, 0.0452, 0.0419),
    (Design.M3, 0.25, 1): (0.1245, 0.1366, 0.0562),
    (Design.M3, 0.35, 1): (0.0753, 0.0890, 0.0474),
    (Design.M3, 0.45, 1): (0.0340, 0.0605, 0.0500),
    (Design.M2, 0.25, 2): (0.1244, 0.1358, 0.0544),
    (Design.M2, 0.35, 2): (0.0307, 0.0568, 0.0478),
    (Design.M2, 0.45, 2): (-0.046, 0.0643, 0.0443),
    (Design.M3, 0.25, 2): (0.0895, 0.1047, 0.0542),
    (Design.M3, 0.35, 2): (0.0494, 0.0719, 0.0522),
    (Design.M3, 0.45, 2): (0.0108, 0.0539, 0.0528),
    (Design.M2, 0.25, 3): (0.1481, 0.1613, 0.0640),
    (Design.M2, 0.35, 3): (0.0666, 0.0954, 0.0682),
    (Design.M2, 0.45, 3): (-0.03, 0.0647, 0.0569),
    (Design.M3, 0.25, 3): (0.0566, 0.0801, 0.0567),
    (Design.M3, 0.35, 3): (0.0190, 0.0671, 0.0644),
    (Design.M3, 0.45, 3): (0.0011, 0.0750, 0.0750),
    (Design.M2, 0.25, 4): (0.1416, 0.1559, 0.0653),
    (Design.M2, 0.35, 4): (0.0703, 0.1053, 0.0784),
    (Design.M2, 0.45, 4): (-0.035, 0.0599, 0.0023),
    (Design.M3, 0.25, 4): (0.0529, 0.0835, 0.0646),
    (Design.M3, 0.35, 4): (-0.004, 0.0731, 0.0730),
    (Design.M3, 0.45, 4): (-0.019, 0.0882, 0.0860),
}


def published(design: Design, d: float, k: int) -> Optional[Triple]:
    return PUBLISHED.get((Design(design), round(float(d), 4), int(k)))
