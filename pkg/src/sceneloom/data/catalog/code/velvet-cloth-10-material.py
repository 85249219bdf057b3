"""Velvet Cloth 10 Material generator (Materials)."""

PARAMS = {
    "size": 1.561,
    "detail": 1,
    "roughness": 0.676,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Velvet Cloth 10 Material"
    for key, value in params.items():
        node[key] = value
    return node
