"""Velvet Cloth 09 Material generator (Materials)."""

PARAMS = {
    "size": 3.406,
    "detail": 3,
    "roughness": 0.27,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Velvet Cloth 09 Material"
    for key, value in params.items():
        node[key] = value
    return node
