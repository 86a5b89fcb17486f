//! The 22 recursions, one equation each.

pub(crate) const RECURSIONS: [&str; 22] = [
    // 1
    "K{1,0}(a,b) = 1",
    // 2
    "K{-1,1}(a,b) = -[2] - 1/K{-1,1}(a-1,b)",
    // 3
    "K{2,-1}(a,b) = [7]/[3]
        - 1/R{3,-1}(a,b-1) * K{-1,1}(a+3,b-2)
        - 1/R{1,0}(a,b-1) * 1/[3]^2",
    // 4
    "K{0,0}(a,b) = -[3][8]/([2][4])
        - K{2,-1}(a-2,b+1)/K{-1,1}(a-1,b)
        - K{-1,1}(a+1,b-1)/K{2,-1}(a-1,b)
        - 1/([2]^2 * K{0,0}(a-1,b))",
    // 5
    "K{-2,1}(a,b) = -[3][8]/([2][4]) * K{-1,1}(a-1,b)
        - 1/K{-1,1}(a-1,b) * (1/K{-1,1}(a-2,b))^2 * K{0,0}(a-2,b+1)
        - 1/K{0,0}(a-1,b) * ([3]/[2] + 1/K{-1,1}(a-2,b))^2 * K{-1,1}(a-1,b)
        - 1/K{-2,1}(a-1,b) * (-[3]/[2] + 1/K{-1,1}(a-2,b) * 1/K{-1,1}(a-3,b) * 1/[2])^2",
    // 6
    "K{1,-1}(a,b) = -[6][8][15]/([3][5][12])
        - 1/R{3,-1}(a,b-1) * K{-2,1}(a+3,b-2)
        - 1/R{1,0}(a,b-1) * ([2]/[3])^2 * K{0,0}(a+1,b-1)
        - 1/R{2,-1}(a,b-1) * (1/[3])^2 * K{-1,1}(a+2,b-2)
        - 1/R{-1,1}(a,b-1) * (1/[3])^2 * K{2,-1}(a-1,b)
        - Ri11(a,b-1) * ([4][6]^2/([2][3]^2[12]))^2
        - Ri22(a,b-1) * ([4][6]/([2][12]))^2
        + (Ri12(a,b-1) + Ri21(a,b-1)) * [4][6]^2/([2][3]^2[12]) * [4][6]/([2][12])",
    // 7
    "K{-1,0}(a,b) = [2][7][12]/([4][6])
        - 1/K{-1,1}(a-1,b) * K{1,-1}(a-2,b+1)
        - 1/K{2,-1}(a-1,b) * K{-2,1}(a+1,b-1)
        - 1
        - 1/K{-2,1}(a-1,b) * K{2,-1}(a-3,b+1)
        - 1/K{1,-1}(a-1,b) * K{-1,1}(a,b-1)
        - 1/K{-1,0}(a-1,b)",
    // 8
    "R{0,1}(a,b) = 1",
    // 9
    "R{3,-1}(a,b) = -[6]/[3] - 1/R{3,-1}(a,b-1)",
    // 10
    "R{1,0}(a,b) = [7]/[3]
        - 1/K{-1,1}(a-1,b) * R{3,-1}(a-2,b+1)
        - 1/K{2,-1}(a-1,b)",
    // 11
    "R{-1,1}(a,b) = -[7]/[2]
        - 1/K{-1,1}(a-2,b) * [7]/[3]
        - 1/K{-1,1}(a-1,b) * (1/K{-1,1}(a-2,b))^2 * R{1,0}(a-2,b+1)
        - 1/K{0,0}(a-1,b) * ([3]/[2] + 1/K{-1,1}(a-2,b))^2",
    // 12
    "R{2,-1}(a,b) = [8][10]/([3]^2[5])
        - 1/R{3,-1}(a,b-1) * R{-1,1}(a+3,b-2)
        - 1/R{1,0}(a,b-1) * [2]^2/[3]^2 * R{1,0}(a+1,b-1)
        - 1/R{-1,1}(a,b-1) * 1/[3]^2 * R{3,-1}(a-1,b)
        - 1/R{2,-1}(a,b-1) * 1/[3]^2",
    // 13
    "R{-3,2}(a,b) = [7]/[3] * (-[3]/[2] * K{-1,1}(a-2,b)
            + 1/(K{-1,1}(a-2,b) * K{-1,1}(a-3,b)^2) * ([3]/[2] + 1/K{-1,1}(a-4,b+1)))
        - R{-1,1}(a-2,b+1)/(K{-1,1}(a-1,b) * (K{-1,1}(a-2,b) * K{-1,1}(a-3,b))^2)
        - 1/K{-2,1}(a-1,b) * (-[3]/[2] * K{-1,1}(a-2,b)
            + 1/K{-1,1}(a-2,b) * (1/K{-1,1}(a-3,b))^2 * ([3]/[2] + 1/K{-1,1}(a-4,b+1)))^2",
    // 14
    "R11(a,b) = -[6][8][15]/([3][5][12])
        - 1/K{-1,1}(a-1,b) * R{2,-1}(a-2,b+1)
        - 1/K{2,-1}(a-1,b) * R{-1,1}(a+1,b-1)
        - 1/K{0,0}(a-1,b) * R{1,0}(a-1,b)
        - 1/K{-2,1}(a-1,b) * R{3,-1}(a-3,b+1)
        - 1/K{1,-1}(a-1,b)",
    // 15
    "R22(a,b) = -[4][6]^2[18]/([3][9][12])
        - 1/R{3,-1}(a,b-1) * R{-3,2}(a+3,b-2)
        - 1/R{1,0}(a,b-1) * R{-1,1}(a+1,b-1)
        - 1/R{-1,1}(a,b-1) * R{1,0}(a-1,b)
        - 1/R{-3,2}(a,b-1) * R{3,-1}(a-3,b+1)
        - R22(a,b-1)/D(a,b-1) * ([4][6]/([2][12]))^2
        - (R12(a,b-1)/D(a,b-1) + R21(a,b-1)/D(a,b-1)) * [4]^2[6]^2/([2][12]^2)
        - R11(a,b-1)/D(a,b-1) * ([4][6]/[12])^2",
    // 16
    "R12(a,b) = [4][6]^2[18]/([2][3][9][12])
        + R{-1,1}(a+1,b-1)/R{1,0}(a,b-1) * ([4]/[3] + 1/K{-1,1}(a-1,b-1))
        + R{1,0}(a-1,b)/R{-1,1}(a,b-1)
            * ([4]/[3] - [2]/([3] * K{-1,1}(a-1,b-1) * K{-1,1}(a-2,b-1)))
        + R{3,-1}(a-3,b+1)/R{-3,2}(a,b-1)
            * ([4]/[3] + 1/([3] * K{-1,1}(a-1,b-1) * K{-1,1}(a-2,b-1) * K{-1,1}(a-3,b-1)))
        + R21(a,b-1)/D(a,b-1) * ([4][6]/([2][12]))^2
        + R11(a,b-1)/D(a,b-1) * [4]^2[6]^2/([2][12]^2)
        - R22(a,b-1)/D(a,b-1) * [4][6]/([2][12])
            * (1/[2] + 1/([3] * K{-1,1}(a-1,b-1)) - [4][6]/([2]^2[12]))
        - R12(a,b-1)/D(a,b-1) * [4][6]/[12]
            * (1/[2] + 1/([3] * K{-1,1}(a-1,b-1)) - [4][6]/([2]^2[12]))",
    // 17
    "R{3,-2}(a,b) = -[4][6]^2[18]/([3][9][12]) * R{3,-1}(a,b-1)
        - 1/R{3,-1}(a,b-1) * ([3]^2 * R11(a+3,b-2)
            - 2*[3]/R{3,-1}(a,b-2) * R12(a+3,b-2)
            + R22(a+3,b-2)/R{3,-1}(a,b-2)^2)
        - 1/R{1,0}(a,b-1) * R{2,-1}(a+1,b-1)
        - 1/R{2,-1}(a,b-1) * R{3,-1}(a,b-1)^2 * R{1,0}(a+2,b-2)
        - R22(a,b-1)/D(a,b-1) * ([4][6]/([2][12]))^2 * R{3,-1}(a,b-1)
        - 2*R12(a,b-1)/D(a,b-1) * [4][6]/([2][12])
            * ([4][6]/[12] + R{3,-1}(a,b-1)) * R{3,-1}(a,b-1)
        - R11(a,b-1)/D(a,b-1) * ([4][6]/[12] + R{3,-1}(a,b-1))^2 * R{3,-1}(a,b-1)
        - 1/R{3,-2}(a,b-1) * ([4][6]/[12] - [6]/[3]
            + 1/R{3,-1}(a,b-2) * ([4][6]^2/([3][12]) - 1
                + 1/R{3,-1}(a,b-3) * [4][6]/[12]))^2",
    // 18
    "R{-2,1}(a,b) = -[6][8][15]/([3][5][12]) * K{-1,1}(a-1,b)
        - 1/K{-1,1}(a-1,b) * (R11(a-2,b+1)/K{-1,1}(a-2,b)^2
            - 2*R12(a-2,b+1)/K{-1,1}(a-2,b)
            + R22(a-2,b+1))
        - 1/K{2,-1}(a-1,b) * R{-3,2}(a+1,b-1)
        - 1/K{0,0}(a-1,b) * R{-1,1}(a-1,b)/K{-1,1}(a-2,b)^2
        - 1/K{-2,1}(a-1,b) * R{1,0}(a-3,b+1)/(K{-1,1}(a-2,b) * K{-1,1}(a-3,b))^2
        - 1/K{-1,0}(a-1,b) * K{-1,1}(a-1,b)^2",
    // 19
    "R{1,-1}(a,b) = -[6][8][15]/([3][5][12]) * K{2,-1}(a-1,b)
        - 1/K{-1,1}(a-1,b) * R{3,-2}(a-2,b+1)
        - 1/K{2,-1}(a-1,b) * (
            ([2]^2/[3] - 1/R{1,0}(a-1,b-1) * 1/[3]^2
                + 1/R{3,-1}(a-1,b-1) * 1/K{-1,1}(a+1,b-2))^2 * R11(a+1,b-1)
            + (1/R{3,-1}(a-1,b-1))^2 * R22(a+1,b-1)
            - 2 * ([2]^2/[3] - 1/R{1,0}(a-1,b-1) * 1/[3]^2
                + 1/R{3,-1}(a-1,b-1) * 1/K{-1,1}(a+1,b-2))
                * 1/R{3,-1}(a-1,b-1) * R12(a+1,b-1))
        - 1/K{0,0}(a-1,b) * ([2]/[3]
            + 1/R{3,-1}(a-1,b-1) * 1/K{-1,1}(a+1,b-2)
                * (1/[2] + 1/K{-1,1}(a,b-2) * 1/K{-1,1}(a-1,b-2)
                    * (-[3]/[2] - 1/K{-1,1}(a-2,b-1)))
            - 1/R{1,0}(a-1,b-1) * 1/[3]
                * (1/([2][3]) - [3]/[2] - 1/K{-1,1}(a-2,b-1)))^2 * R{2,-1}(a-1,b)
        - 1/K{1,-1}(a-1,b) * (-[4]/[3]
            - 1/R{3,-1}(a-1,b-1) * 1/K{-1,1}(a+1,b-2) * 1/K{-1,1}(a,b-2)
            - 1/R{1,0}(a-1,b-1) * [2]/[3]^2)^2 * R{1,0}(a,b-1)
        - 1/K{-1,0}(a-1,b) * (-[4]/[3]
            - 1/R{3,-1}(a-1,b-1) * (1/[3]
                + 1/K{-1,1}(a+1,b-2) * 1/K{-1,1}(a,b-2) * 1/K{-1,1}(a-1,b-2)
                    * ([4]/[3] + 1/K{-1,1}(a-2,b-1)))
            + 1/R{1,0}(a-1,b-1) * 1/[3] * ([4]/[3] + 1/K{-1,1}(a-2,b-1)))^2 * R{3,-1}(a-2,b)",
    // 20
    "R{-1,0}(a,b) = -[6][8][15]/([3][5][12]) * K{0,0}(a-1,b)
        - 1/K{-1,1}(a-1,b) * 1/K{-1,1}(a-2,b)^2 * R{1,-1}(a-2,b+1)
        - 1/K{2,-1}(a-1,b) * (1/[2]
            + 1/K{2,-1}(a-2,b) * ([5]/([2][3])
                + 1/R{3,-1}(a-2,b-1)
                    * (1/[2]^2 + 1/([2]^2 * K{-1,1}(a,b-2) * K{-1,1}(a-1,b-2)))
                + 1/([2][3]^2 * R{1,0}(a-2,b-1))))^2 * R{-2,1}(a+1,b-1)
        - 1/K{0,0}(a-1,b) * (
            (-[3]/[2]
                - 1/K{-1,1}(a-2,b) * ([2]^2/[3] - 1/([3]^2 * R{1,0}(a-3,b)))
                - 1/K{-1,1}(a-1,b-1)
                    * (1/(K{-1,1}(a-2,b) * R{3,-1}(a-3,b)) - 1/K{2,-1}(a-2,b))
                - 1/([2]^2 * K{0,0}(a-2,b)))^2 * R11(a-1,b)
            + 2 * (-[3]/[2]
                - 1/K{-1,1}(a-2,b) * ([2]^2/[3] - 1/([3]^2 * R{1,0}(a-3,b)))
                - 1/K{-1,1}(a-1,b-1)
                    * (1/(K{-1,1}(a-2,b) * R{3,-1}(a-3,b)) - 1/K{2,-1}(a-2,b))
                - 1/([2]^2 * K{0,0}(a-2,b)))
                * (1/(K{-1,1}(a-2,b) * R{3,-1}(a-3,b)) - 1/K{2,-1}(a-2,b)) * R12(a-1,b)
            + (1/(K{-1,1}(a-2,b) * R{3,-1}(a-3,b)) - 1/K{2,-1}(a-2,b))^2 * R22(a-1,b))
        - 1/K{-2,1}(a-1,b) * ([3]/[2]
            - 1/K{-1,1}(a-2,b) * ([2]/([3] * K{-1,1}(a-3,b))
                + 1/([3] * R{1,0}(a-3,b) * K{-1,1}(a-3,b)) * ([4]/[3] + 1/K{-1,1}(a-4,b)))
            - 1/([2] * K{0,0}(a-2,b)) * ([3]/[2] + 1/K{-1,1}(a-3,b)))^2 * R{2,-1}(a-3,b+1)
        - 1/K{1,-1}(a-1,b) * (-[3]/[2]
            + 1/K{2,-1}(a-2,b) * ([5]/([2][3])
                + 1/(R{3,-1}(a-2,b-1) * K{-1,1}(a,b-2) * K{-1,1}(a-1,b-2))
                + [2]/([3]^2 * R{1,0}(a-2,b-1)))
            + (1/([2] * K{0,0}(a-2,b))
                + 1/(K{2,-1}(a-2,b) * K{-1,1}(a-1,b-1) * K{-1,1}(a-2,b-1)))
                * ([4]/[2]^2 - 1/K{2,-1}(a-3,b) * ([5]/([2][3])
                    + 1/R{3,-1}(a-3,b-1)
                        * (1/[2]^2 + 1/([2]^2 * K{-1,1}(a-1,b-2) * K{-1,1}(a-2,b-2)))
                    + 1/([2][3]^2 * R{1,0}(a-3,b-1)))))^2 * R{-1,1}(a,b-1)
        - 1/K{-1,0}(a-1,b) * (1/K{-1,1}(a-2,b) * ([4]/[3] + [2]/([3]^2 * R{1,0}(a-3,b)))
            + (1/(K{-1,1}(a-2,b) * R{3,-1}(a-3,b)) - 1/K{2,-1}(a-2,b))
                * 1/(K{-1,1}(a-1,b-1) * K{-1,1}(a-2,b-1))
            - 1/([2] * K{0,0}(a-2,b)))^2 * R{1,0}(a-2,b)",
    // 21
    "R{-3,1}(a,b) = -[6][8][15]/([3][5][12]) * K{-2,1}(a-1,b)
        - 1/K{-1,1}(a-1,b) * R{-1,0}(a-2,b+1)/(K{-1,1}(a-2,b) * K{-1,1}(a-3,b))^2
        - 1/K{0,0}(a-1,b) * (-[3]/[2]
            + 1/(K{-1,1}(a-2,b) * K{-1,1}(a-3,b))
                * ([2]/[3] + 1/([3] * R{1,0}(a-3,b)) * ([4]/[3] + 1/K{-1,1}(a-4,b)))
            + 1/([2] * K{0,0}(a-2,b)) * ([3]/[2] + 1/K{-1,1}(a-3,b)))^2 * R{-2,1}(a-1,b)
        - 1/K{-2,1}(a-1,b) * (
            ([3]/([2] * K{-1,1}(a-3,b))
                - 1/(K{-1,1}(a-2,b) * K{-1,1}(a-3,b)^2) * (-[3]/[2]
                    - 1/K{-1,1}(a-4,b+1) * ([2]^2/[3]
                        + 1/(R{3,-1}(a-5,b+1) * K{-1,1}(a-3,b))
                        - 1/([3]^2 * R{1,0}(a-5,b+1)))
                    + 1/(K{2,-1}(a-4,b+1) * K{-1,1}(a-3,b))
                    - 1/([2]^2 * K{0,0}(a-4,b+1)))
                + 1/K{0,0}(a-2,b) * ([3]/[2] + 1/K{-1,1}(a-3,b))^2 * 1/K{-1,1}(a-3,b)
                - 1/K{-2,1}(a-2,b) * ([3]/[2] - 1/([2] * K{-1,1}(a-3,b) * K{-1,1}(a-4,b)))^2
            )^2 * R11(a-3,b+1)
            + 2 * (-[3]/[2]
                - 1/(K{-1,1}(a-2,b) * K{-1,1}(a-3,b)^2)
                    * (1/(K{-1,1}(a-4,b+1) * R{3,-1}(a-5,b+1)) - 1/K{2,-1}(a-4,b+1))
                - 1/K{0,0}(a-2,b) * ([3]/[2] + 1/K{-1,1}(a-3,b))^2)
            * ([3]/([2] * K{-1,1}(a-3,b))
                - 1/(K{-1,1}(a-2,b) * K{-1,1}(a-3,b)^2) * (-[3]/[2]
                    - 1/K{-1,1}(a-4,b+1) * ([2]^2/[3]
                        + 1/(R{3,-1}(a-5,b+1) * K{-1,1}(a-3,b))
                        - 1/([3]^2 * R{1,0}(a-5,b+1)))
                    + 1/(K{2,-1}(a-4,b+1) * K{-1,1}(a-3,b))
                    - 1/([2]^2 * K{0,0}(a-4,b+1)))
                + 1/K{0,0}(a-2,b) * ([3]/[2] + 1/K{-1,1}(a-3,b))^2 * 1/K{-1,1}(a-3,b)
                - 1/K{-2,1}(a-2,b) * ([3]/[2] - 1/([2] * K{-1,1}(a-3,b) * K{-1,1}(a-4,b)))^2
            ) * R12(a-3,b+1)
            + (-[3]/[2]
                - 1/(K{-1,1}(a-2,b) * K{-1,1}(a-3,b)^2)
                    * (1/(K{-1,1}(a-4,b+1) * R{3,-1}(a-5,b+1)) - 1/K{2,-1}(a-4,b+1))
                - 1/K{0,0}(a-2,b) * ([3]/[2] + 1/K{-1,1}(a-3,b))^2)^2 * R22(a-3,b+1))
        - 1/K{1,-1}(a-1,b) * ([3]/[2]
            + 1/K{0,0}(a-2,b) * ([3]/[2] + 1/K{-1,1}(a-3,b))
                * ([4]/[2]^2 - 1/K{2,-1}(a-3,b) * ([5]/([2][3])
                    - 1/([2] * R{3,-1}(a-3,b-1) * K{-1,1}(a-1,b-2))
                    + 1/([2][3]^2 * R{1,0}(a-3,b-1)))))^2 * R{-3,2}(a,b-1)
        - 1/K{-1,0}(a-1,b) * (
            1/K{-1,1}(a-2,b) * 1/K{-1,1}(a-3,b) * (-[3]/[2]
                + 1/(K{2,-1}(a-4,b+1) * K{-1,1}(a-3,b)) * (-[5]/[3]
                    + 1/(R{3,-1}(a-4,b) * K{-1,1}(a-2,b-1))
                    - 1/([3]^2 * R{1,0}(a-4,b)))
                + 1/([2] * K{0,0}(a-4,b+1))
                    * ([4]/[2]^2 - 1/K{2,-1}(a-5,b+1) * ([5]/([2][3])
                        - 1/([2] * R{3,-1}(a-5,b) * K{-1,1}(a-3,b-1))
                        + 1/([2][3]^2 * R{1,0}(a-5,b)))))
            - 1/K{0,0}(a-2,b) * ([3]/[2] + 1/K{-1,1}(a-3,b)) * 1/K{-1,1}(a-3,b)
            + 1/K{-2,1}(a-2,b) * ([3]/[2] - 1/([2] * K{-1,1}(a-3,b) * K{-1,1}(a-4,b)))
        )^2 * R{-1,1}(a-2,b)",
    // 22
    "R{0,-1}(a,b) = [7][8][15]/([3][4][5])
        - 1/R{3,-1}(a,b-1) * R{-3,1}(a+3,b-2)
        - 1/R{1,0}(a,b-1) * R{-1,0}(a+1,b-1)
        - 1/R{-1,1}(a,b-1) * R{1,-1}(a-1,b)
        - 1/R{2,-1}(a,b-1) * R{-2,1}(a+2,b-2)
        - 1/R{-3,2}(a,b-1) * R{3,-2}(a-3,b+1)
        - R22(a,b-1)/D(a,b-1) * R11(a,b-1)
        + R12(a,b-1)/D(a,b-1) * R12(a,b-1)
        + R21(a,b-1)/D(a,b-1) * R21(a,b-1)
        - R11(a,b-1)/D(a,b-1) * R22(a,b-1)
        - 1/R{3,-2}(a,b-1) * R{-3,2}(a+3,b-3)
        - 1/R{-2,1}(a,b-1) * R{2,-1}(a-2,b)
        - 1/R{1,-1}(a,b-1) * R{-1,1}(a+1,b-2)
        - 1/R{-1,0}(a,b-1) * R{1,0}(a-1,b-1)
        - 1/R{-3,1}(a,b-1) * R{3,-1}(a-3,b)
        - 1/R{0,-1}(a,b-1) * R{0,1}(a,b-2)",
];

/// Recursion 6 with `1/^{ij}R` read literally as reciprocals of the entries.
pub(crate) const RECURSION_6_LITERAL: &str = "K{1,-1}(a,b) = -[6][8][15]/([3][5][12])
        - 1/R{3,-1}(a,b-1) * K{-2,1}(a+3,b-2)
        - 1/R{1,0}(a,b-1) * ([2]/[3])^2 * K{0,0}(a+1,b-1)
        - 1/R{2,-1}(a,b-1) * (1/[3])^2 * K{-1,1}(a+2,b-2)
        - 1/R{-1,1}(a,b-1) * (1/[3])^2 * K{2,-1}(a-1,b)
        - 1/R11(a,b-1) * ([4][6]^2/([2][3]^2[12]))^2
        - 1/R22(a,b-1) * ([4][6]/([2][12]))^2
        + (1/R12(a,b-1) + 1/R21(a,b-1)) * [4][6]^2/([2][3]^2[12]) * [4][6]/([2][12])";
