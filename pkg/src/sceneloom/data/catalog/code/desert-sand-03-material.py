"""Desert Sand 03 Material generator (Materials)."""

PARAMS = {
    "size": 1.982,
    "detail": 5,
    "roughness": 0.478,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Desert Sand 03 Material"
    for key, value in params.items():
        node[key] = value
    return node
