"""Velvet Cloth 07 Material generator (Materials)."""

PARAMS = {
    "size": 1.197,
    "detail": 3,
    "roughness": 0.427,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Velvet Cloth 07 Material"
    for key, value in params.items():
        node[key] = value
    return node
