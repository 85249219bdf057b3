"""Desert Sand 04 Material generator (Materials)."""

PARAMS = {
    "size": 1.343,
    "detail": 4,
    "roughness": 0.508,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Desert Sand 04 Material"
    for key, value in params.items():
        node[key] = value
    return node
