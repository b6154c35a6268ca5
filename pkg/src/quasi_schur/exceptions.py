# exceptions.py
# Chứa các lớp ngoại lệ và trình ánh xạ mã thoát cho gói quasi_schur


class QuasiSchurError(Exception):
    """Lớp cơ sở cho mọi lỗi do quasi_schur phát sinh."""

    exit_code = 1


class ValidationError(QuasiSchurError, ValueError):
    """Một giá trị hoặc điều kiện tiên quyết không hợp lệ."""

    exit_code = 3


class BasisMismatchError(ValidationError):
    """Phép toán giữa hai giá trị khác cơ sở hoặc khác bậc."""

    pass


class SizeGuardExceeded(ValidationError):
    """Phép liệt kê vượt quá giới hạn kích thước đã cấu hình."""

    def __init__(self, size: int, guard: int):
        super().__init__(f"|lambda|*|mu| = {size} exceeds the size guard {guard}")
        self.size = size
        self.guard = guard


class NotSymmetricError(ValidationError):
    """Khai triển theo cơ sở F không đối xứng."""

    pass


class RoundTripError(ValidationError):
    """Khai triển ngược kết quả Schur không tái tạo được đầu vào."""

    pass


class UnsupportedWidthError(ValidationError):
    """Yêu cầu dựng xích cho độ rộng khác 2, 3 hoặc 4."""

    def __init__(self, w: int):
        super().__init__(f"symmetric chain decompositions are implemented for w in {{2, 3, 4}}, got w={w}")
        self.w = w


class CrossCheckError(QuasiSchurError):
    """Hai cách tính độc lập của cùng một đại lượng không khớp nhau."""

    exit_code = 4


def exit_code_for(exc: BaseException) -> int:
    """Ánh xạ một ngoại lệ sang mã thoát của dòng lệnh."""
    if isinstance(exc, QuasiSchurError):
        return exc.exit_code
    return 1
